#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlcox/coxeter_graph.hpp"
#include "nlcox/georep.hpp"
#include "nlcox/triangle.hpp"
#include "nlcox/witness.hpp"

namespace nlcox {

// Largest graph the partition search and the finite-type recognizer accept.
inline constexpr int kSearchCapacity = 20;

enum class NLStatus { NL, NotNL, Unknown };

const char* nl_status_name(NLStatus s);

struct RuleFiring {
  std::string rule;    // "R1".."R7", with a qualifier on the decisive entry
  std::string cite;    // classification result the rule rests on
  std::string reason;  // what was observed on this graph
};

// Verdict with the ordered trace of every rule evaluated. A NOT_NL verdict
// always carries exactly one witness, already re-verified.
struct NLVerdict {
  NLStatus status = NLStatus::Unknown;
  std::vector<RuleFiring> trace;
  std::optional<EpimorphismWitness> partition_witness;
  std::optional<georep::LoxodromicCertificate> matrix_witness;
};

struct ClassifyOptions {
  double zero_tol = georep::kZeroTol;
  double loxodromic_margin = georep::kLoxodromicMargin;
};

// Applies the rules R1..R7 in order; the first decisive rule fixes the
// status. UNKNOWN is an honest outcome: connected, non-right-angled graphs
// beyond the covered cases with no partition witness stay unclassified.
NLVerdict classify_nl(const CoxeterGraph& g, const ClassifyOptions& opts = {});

// Exhaustive backtracking search over partitions (A, B, K), lexicographic in
// vertex order with colors tried as A < B < K and the A/B swap symmetry
// pruned; the first valid witness is returned. Exact for graphs within
// kSearchCapacity vertices; beyond that a CapacityError is thrown.
std::optional<EpimorphismWitness> find_dinfty_epimorphism(const CoxeterGraph& g);

// Semantic validity of a witness: every relator of the presentation (the
// squares and the (s_i s_j)^{m_ij} for finite pairs) must map to the identity
// of the infinite dihedral group, and the image must contain two distinct
// reflections. Checked by direct evaluation, independent of the search's
// combinatorial conditions.
bool verify_epimorphism(const CoxeterGraph& g, const EpimorphismWitness& w);

struct AbelianizationInfo {
  bool surjects = false;  // always false: the abelianization is 2-torsion
  int z2_rank = 0;        // number of odd components
};

// No Coxeter group surjects onto the integers: the abelianization is
// (Z/2)^rank with rank the number of odd components.
AbelianizationInfo surjects_onto_z(const CoxeterGraph& g);

// Recognizes finite Coxeter groups by catalog lookup: vertices split into
// irreducible components under non-commutation (label >= 3 or absent pair);
// a component containing an absent pair is infinite, otherwise it must be a
// tree matching one of A_n, B_n, D_n, E6, E7, E8, F4, H3, H4, I2(m).
bool is_finite_coxeter(const CoxeterGraph& g);

// Runs the relevant verification for whichever witness the verdict carries;
// false when a NOT_NL verdict has no witness or the witness fails.
bool recheck_witness(const CoxeterGraph& g, const NLVerdict& v,
                     double margin = georep::kLoxodromicMargin);

// Canonical JSON / text renderings; identical inputs give identical bytes.
std::string verdict_to_json(const CoxeterGraph& g, const NLVerdict& v);
std::string verdict_to_text(const CoxeterGraph& g, const NLVerdict& v);

}  // namespace nlcox
