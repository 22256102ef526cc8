#pragma once

#include <vector>

#include "nlcox/coxeter_graph.hpp"

namespace nlcox {

// Partition (A, B, K) of the vertex indices of a graph, encoding the map
// that sends A to the reflection r, B to the reflection s, and K to the
// identity of the infinite dihedral group. Valid witnesses extend to a
// surjective homomorphism from the Coxeter group; validity is checked on
// relators by verify_epimorphism, never assumed.
struct EpimorphismWitness {
  std::vector<int> A;
  std::vector<int> B;
  std::vector<int> K;
};

// Role of each vertex under the witness map: 0 -> r, 1 -> s, 2 -> identity.
// Throws std::invalid_argument unless (A, B, K) is a partition of the
// graph's vertex set.
std::vector<char> witness_roles(const CoxeterGraph& g, const EpimorphismWitness& w);

}  // namespace nlcox
