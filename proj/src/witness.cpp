#include "nlcox/witness.hpp"

#include <stdexcept>

namespace nlcox {

std::vector<char> witness_roles(const CoxeterGraph& g, const EpimorphismWitness& w) {
  std::vector<char> roles(static_cast<std::size_t>(g.size()), -1);
  auto assign = [&](const std::vector<int>& part, char role) {
    for (int v : part) {
      if (v < 0 || v >= g.size())
        throw std::invalid_argument("witness references vertex index " +
                                    std::to_string(v) + " outside the graph");
      auto& slot = roles[static_cast<std::size_t>(v)];
      if (slot != -1)
        throw std::invalid_argument("witness assigns vertex '" + g.name(v) +
                                    "' to more than one part");
      slot = role;
    }
  };
  assign(w.A, 0);
  assign(w.B, 1);
  assign(w.K, 2);
  for (int v = 0; v < g.size(); ++v)
    if (roles[static_cast<std::size_t>(v)] == -1)
      throw std::invalid_argument("witness misses vertex '" + g.name(v) + "'");
  return roles;
}

}  // namespace nlcox
