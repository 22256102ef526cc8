#include "nlcox/classify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "nlcox/dinfty.hpp"

namespace nlcox {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kCiteDisconnected = "Proposition 4.1 (disconnected graphs)";
constexpr const char* kCiteRightAngled = "Theorem 1.1 (right-angled case)";
constexpr const char* kCiteSingle = "finite groups have Property (NL)";
constexpr const char* kCiteTwoGen = "two-generator dihedral classification";
constexpr const char* kCiteTriangle = "Theorem 1.2 (triangle groups)";
constexpr const char* kCiteSpherical = "Proposition 4.6 (spherical triangle groups)";
constexpr const char* kCiteEuclidean = "Proposition 4.7 (euclidean triangle groups)";
constexpr const char* kCiteHyperbolic = "Proposition 4.8 (hyperbolic triangle groups)";
constexpr const char* kCiteFinite = "finite groups have Property (NL)";
constexpr const char* kCiteQuotient =
    "surjection onto the infinite dihedral group; loxodromics lift through quotients";

std::string set_to_string(const CoxeterGraph& g, const std::vector<int>& part) {
  std::string out = "{";
  for (std::size_t k = 0; k < part.size(); ++k) {
    if (k > 0) out += ", ";
    out += g.name(part[k]);
  }
  out += "}";
  return out;
}

// Witness used by the paper's disconnected-graph argument: first component
// to r, second to s, everything else to the identity.
EpimorphismWitness component_witness(const std::vector<std::vector<int>>& comps) {
  EpimorphismWitness w;
  w.A = comps[0];
  w.B = comps[1];
  for (std::size_t c = 2; c < comps.size(); ++c)
    w.K.insert(w.K.end(), comps[c].begin(), comps[c].end());
  std::sort(w.K.begin(), w.K.end());
  return w;
}

// Combinatorial conditions making the role map a homomorphism: no finite
// edge may join A to B, and every edge from K into A or B must have an even
// label. (r^m = 1 iff m is even; (rs)^m is never 1 for finite m >= 1.)
bool pair_ok(int role_u, int role_v, int m) {
  if (m < 2) return true;  // absent pair: no relator
  const bool u_refl = role_u != 2;
  const bool v_refl = role_v != 2;
  if (u_refl && v_refl && role_u != role_v) return false;
  if (u_refl != v_refl && m % 2 != 0) return false;
  return true;
}

struct RuleTracer {
  NLVerdict verdict;

  void note(const std::string& rule, const char* cite, std::string reason) {
    verdict.trace.push_back({rule, cite, std::move(reason)});
  }
  void decide(NLStatus status, const std::string& rule, const char* cite,
              std::string reason) {
    verdict.status = status;
    verdict.trace.push_back({rule, cite, std::move(reason)});
  }
};

json witness_json(const CoxeterGraph& g, const NLVerdict& v) {
  if (v.partition_witness) {
    const auto& w = *v.partition_witness;
    auto names = [&g](const std::vector<int>& part) {
      std::vector<std::string> out;
      for (int i : part) out.push_back(g.name(i));
      return out;
    };
    json doc;
    doc["type"] = "epimorphism";
    doc["A"] = names(w.A);
    doc["B"] = names(w.B);
    doc["K"] = names(w.K);
    return doc;
  }
  if (v.matrix_witness) {
    const auto& c = *v.matrix_witness;
    json doc;
    doc["type"] = "loxodromic";
    std::vector<std::string> letters;
    for (int i : c.word) letters.push_back(g.name(i));
    doc["word"] = letters;
    json rows = json::array();
    for (Eigen::Index i = 0; i < c.matrix.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < c.matrix.cols(); ++j) row.push_back(c.matrix(i, j));
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    doc["spectral_radius"] = c.spectral_radius;
    doc["translation_length"] = c.translation_length;
    return doc;
  }
  return nullptr;
}

}  // namespace

const char* nl_status_name(NLStatus s) {
  switch (s) {
    case NLStatus::NL: return "NL";
    case NLStatus::NotNL: return "NOT_NL";
    case NLStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::optional<EpimorphismWitness> find_dinfty_epimorphism(const CoxeterGraph& g) {
  const int n = g.size();
  if (n > kSearchCapacity)
    throw CapacityError("partition search supports at most " +
                        std::to_string(kSearchCapacity) + " vertices, got " +
                        std::to_string(n));
  std::vector<char> roles(static_cast<std::size_t>(n), -1);

  auto assemble = [&]() {
    EpimorphismWitness w;
    for (int v = 0; v < n; ++v) {
      switch (roles[static_cast<std::size_t>(v)]) {
        case 0: w.A.push_back(v); break;
        case 1: w.B.push_back(v); break;
        default: w.K.push_back(v); break;
      }
    }
    return w;
  };

  // Lexicographic backtracking over role strings with colors A < B < K.
  // Swap pruning: the first vertex mapped to a reflection goes to A.
  auto dfs = [&](auto&& self, int v, bool have_a, bool have_b) -> bool {
    if (v == n) return have_a && have_b;
    for (char role = 0; role < 3; ++role) {
      if (role == 1 && !have_a) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = pair_ok(roles[static_cast<std::size_t>(u)], role, g.label(u, v));
      if (!ok) continue;
      roles[static_cast<std::size_t>(v)] = role;
      if (self(self, v + 1, have_a || role == 0, have_b || role == 1)) return true;
      roles[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };

  if (!dfs(dfs, 0, false, false)) return std::nullopt;
  return assemble();
}

bool verify_epimorphism(const CoxeterGraph& g, const EpimorphismWitness& w) {
  const std::vector<char> roles = witness_roles(g, w);

  // Surjectivity: the image must contain the two distinct reflections.
  if (w.A.empty() || w.B.empty()) return false;

  auto image = [&](int v) {
    switch (roles[static_cast<std::size_t>(v)]) {
      case 0: return dinfty::refl_r();
      case 1: return dinfty::refl_s();
      default: return dinfty::identity();
    }
  };

  // Involution relators s_i^2.
  for (int i = 0; i < g.size(); ++i) {
    const auto e = image(i);
    if (dinfty::compose(e, e) != dinfty::identity()) return false;
  }
  // Edge relators (s_i s_j)^{m_ij} for finite labels.
  for (const auto& [i, j, m] : g.edges()) {
    const auto e = dinfty::compose(image(i), image(j));
    if (dinfty::power(e, m) != dinfty::identity()) return false;
  }
  return true;
}

AbelianizationInfo surjects_onto_z(const CoxeterGraph& g) {
  AbelianizationInfo info;
  info.surjects = false;
  info.z2_rank = static_cast<int>(odd_components(g).size());
  return info;
}

namespace {

// Finite-type catalog matching for one irreducible component. `verts` is a
// component under the non-commutation relation with no absent pairs inside,
// so all its diagram edges carry finite labels >= 3.
bool component_is_finite_type(const CoxeterGraph& g, const std::vector<int>& verts) {
  const int k = static_cast<int>(verts.size());
  if (k == 1) return true;  // A1

  // Diagram edges within the component.
  std::vector<std::array<int, 3>> edges;
  std::vector<int> degree(static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const int m = g.label(verts[a], verts[b]);
      if (m >= 3) {
        edges.push_back({a, b, m});
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
      }
    }
  if (static_cast<int>(edges.size()) != k - 1) return false;  // not a tree

  if (k == 2) return true;  // I2(m), any finite m >= 3

  int branch = -1;
  for (int a = 0; a < k; ++a) {
    if (degree[static_cast<std::size_t>(a)] > 3) return false;
    if (degree[static_cast<std::size_t>(a)] == 3) {
      if (branch >= 0) return false;
      branch = a;
    }
  }

  auto neighbors = [&](int a) {
    std::vector<std::pair<int, int>> out;  // (vertex, label)
    for (const auto& [x, y, m] : edges) {
      if (x == a) out.push_back({y, m});
      if (y == a) out.push_back({x, m});
    }
    return out;
  };

  if (branch >= 0) {
    // D_n and E6/E7/E8 have simply laced diagrams.
    for (const auto& [x, y, m] : edges) {
      (void)x;
      (void)y;
      if (m != 3) return false;
    }
    std::vector<int> legs;
    for (auto [first, m] : neighbors(branch)) {
      (void)m;
      int len = 1, prev = branch, cur = first;
      for (;;) {
        auto nb = neighbors(cur);
        int next = -1;
        for (auto [cand, lab] : nb) {
          (void)lab;
          if (cand != prev) next = cand;
        }
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] != 1) return false;
    if (legs[1] == 1) return true;                    // D_n
    if (legs[1] == 2) return legs[2] >= 2 && legs[2] <= 4;  // E6, E7, E8
    return false;
  }

  // Path: walk from one end and read off the label sequence.
  int end = -1;
  for (int a = 0; a < k; ++a)
    if (degree[static_cast<std::size_t>(a)] == 1) {
      end = a;
      break;
    }
  if (end < 0) return false;
  std::vector<int> labels;
  int prev = -1, cur = end;
  while (static_cast<int>(labels.size()) < k - 1) {
    int next = -1, lab = 0;
    for (auto [cand, m] : neighbors(cur)) {
      if (cand != prev) {
        next = cand;
        lab = m;
      }
    }
    if (next < 0) return false;
    labels.push_back(lab);
    prev = cur;
    cur = next;
  }

  int count3 = 0, count4 = 0, count5 = 0, other = 0;
  for (int m : labels) {
    if (m == 3) ++count3;
    else if (m == 4) ++count4;
    else if (m == 5) ++count5;
    else ++other;
  }
  if (other > 0) return false;
  if (count4 == 0 && count5 == 0) return true;  // A_n
  if (count5 == 0 && count4 == 1) {
    if (labels.front() == 4 || labels.back() == 4) return true;  // B_n
    return k == 4 && labels[1] == 4;                             // F4
  }
  if (count4 == 0 && count5 == 1 && (k == 3 || k == 4))
    return labels.front() == 5 || labels.back() == 5;  // H3, H4
  return false;
}

}  // namespace

bool is_finite_coxeter(const CoxeterGraph& g) {
  const int n = g.size();
  if (n > kSearchCapacity)
    throw CapacityError("finite-type recognition supports at most " +
                        std::to_string(kSearchCapacity) + " vertices, got " +
                        std::to_string(n));

  // Any absent pair puts an infinite dihedral subgroup in the group.
  if (!is_complete(g)) return false;

  // Irreducible components under non-commutation (labels >= 3 here, since
  // the graph is complete).
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int comp_count = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = comp_count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        if (u != v && g.label(u, v) >= 3) {
          comp[static_cast<std::size_t>(v)] = comp_count;
          stack.push_back(v);
        }
      }
    }
    ++comp_count;
  }

  for (int c = 0; c < comp_count; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (comp[static_cast<std::size_t>(v)] == c) verts.push_back(v);
    if (!component_is_finite_type(g, verts)) return false;
  }
  return true;
}

bool recheck_witness(const CoxeterGraph& g, const NLVerdict& v, double margin) {
  if (v.status != NLStatus::NotNL) return true;
  if (v.partition_witness) return verify_epimorphism(g, *v.partition_witness);
  if (v.matrix_witness) {
    auto cert = georep::loxodromic_certificate(g, v.matrix_witness->word, margin);
    return cert.has_value();
  }
  return false;
}

NLVerdict classify_nl(const CoxeterGraph& g, const ClassifyOptions& opts) {
  RuleTracer t;
  const int n = g.size();

  // R1: disconnected graphs surject onto the infinite dihedral group.
  const auto comps = connected_components(g);
  if (comps.size() >= 2) {
    auto w = component_witness(comps);
    t.decide(NLStatus::NotNL, "R1", kCiteDisconnected,
             "graph has " + std::to_string(comps.size()) +
                 " connected components; generators of " + set_to_string(g, w.A) +
                 " map to r, of " + set_to_string(g, w.B) +
                 " to s, and the rest to the identity");
    t.verdict.partition_witness = std::move(w);
  } else {
    t.note("R1", kCiteDisconnected, "graph is connected; rule does not apply");
  }

  // R2: right-angled groups are classified by completeness.
  if (t.verdict.status == NLStatus::Unknown) {
    if (is_right_angled(g)) {
      if (is_complete(g)) {
        t.decide(NLStatus::NL, "R2-complete", kCiteRightAngled,
                 "right-angled and complete: the group is (Z/2)^" +
                     std::to_string(n) + ", finite");
      } else {
        int a = -1, b = -1;
        for (int i = 0; i < n && a < 0; ++i)
          for (int j = i + 1; j < n && a < 0; ++j)
            if (!g.has_edge(i, j)) {
              a = i;
              b = j;
            }
        EpimorphismWitness w;
        w.A = {a};
        w.B = {b};
        for (int v = 0; v < n; ++v)
          if (v != a && v != b) w.K.push_back(v);
        t.decide(NLStatus::NotNL, "R2-incomplete", kCiteRightAngled,
                 "right-angled but incomplete: generators " + g.name(a) + " and " +
                     g.name(b) + " share no edge and map onto the two reflections");
        t.verdict.partition_witness = std::move(w);
      }
    } else {
      t.note("R2", kCiteRightAngled,
             "graph has an edge labeled >= 3; rule does not apply");
    }
  }

  // R3: a single involution generates Z/2.
  if (t.verdict.status == NLStatus::Unknown) {
    if (n == 1)
      t.decide(NLStatus::NL, "R3", kCiteSingle, "single generator: the group is Z/2");
    else
      t.note("R3", kCiteSingle, "more than one vertex; rule does not apply");
  }

  // R4: two generators give a dihedral group.
  if (t.verdict.status == NLStatus::Unknown) {
    if (n == 2) {
      if (is_complete(g)) {
        t.decide(NLStatus::NL, "R4-complete", kCiteTwoGen,
                 "two generators with (s1 s2)^" + std::to_string(g.label(0, 1)) +
                     " = 1: dihedral of order " + std::to_string(2 * g.label(0, 1)));
      } else {
        EpimorphismWitness w;
        w.A = {0};
        w.B = {1};
        t.decide(NLStatus::NotNL, "R4-incomplete", kCiteTwoGen,
                 "two generators with no relation: the group is the infinite "
                 "dihedral group itself");
        t.verdict.partition_witness = std::move(w);
      }
    } else {
      t.note("R4", kCiteTwoGen, "vertex count is not 2; rule does not apply");
    }
  }

  // R5: triangle groups by the exact angle-sum trichotomy.
  if (t.verdict.status == NLStatus::Unknown) {
    if (n == 3 && is_complete(g)) {
      const TriangleClass tc =
          classify_triangle(g.label(0, 1), g.label(0, 2), g.label(1, 2));
      const std::string sum = "1/l + 1/m + 1/n = " + tc.angle_sum_str();
      switch (tc.geometry) {
        case TriangleGeometry::Spherical:
          t.decide(NLStatus::NL, "R5-spherical", kCiteSpherical,
                   sum + " > 1: the triangle group is finite");
          break;
        case TriangleGeometry::Euclidean:
          t.decide(NLStatus::NL, "R5-euclidean", kCiteEuclidean,
                   sum + " = 1: virtually Z^2 and no surjection onto Z or the "
                         "infinite dihedral group (Lemma 4.4)");
          break;
        case TriangleGeometry::Hyperbolic: {
          auto cert = georep::find_loxodromic_certificate(g, 6, opts.loxodromic_margin,
                                                          opts.zero_tol);
          if (!cert)
            throw NumericError(
                "no loxodromic certificate found at word length <= 6 for a "
                "hyperbolic triangle graph");
          t.decide(NLStatus::NotNL, "R5-hyperbolic", kCiteHyperbolic,
                   sum + " < 1: word '" + word_to_string(g, cert->word) +
                       "' acts loxodromically with spectral radius " +
                       std::to_string(cert->spectral_radius));
          t.verdict.matrix_witness = std::move(cert);
          break;
        }
      }
    } else {
      t.note("R5", kCiteTriangle,
             "not a complete 3-vertex graph; rule does not apply");
    }
  }

  // R6: finite-type recognition.
  if (t.verdict.status == NLStatus::Unknown) {
    if (n > kSearchCapacity) {
      t.note("R6", kCiteFinite,
             "skipped: vertex count exceeds the recognition capacity of " +
                 std::to_string(kSearchCapacity));
    } else if (is_finite_coxeter(g)) {
      t.decide(NLStatus::NL, "R6-finite", kCiteFinite,
               "defining graph is of finite type: the group is finite");
    } else {
      t.note("R6", kCiteFinite, "graph is not of finite type; rule does not apply");
    }
  }

  // R7: exhaustive partition search for an epimorphism onto D_infinity.
  if (t.verdict.status == NLStatus::Unknown) {
    if (n > kSearchCapacity) {
      t.note("R7", kCiteQuotient,
             "skipped: vertex count exceeds the search capacity of " +
                 std::to_string(kSearchCapacity));
    } else if (auto w = find_dinfty_epimorphism(g)) {
      t.decide(NLStatus::NotNL, "R7", kCiteQuotient,
               "partition A = " + set_to_string(g, w->A) + ", B = " +
                   set_to_string(g, w->B) + ", K = " + set_to_string(g, w->K) +
                   " defines a surjection onto the infinite dihedral group");
      t.verdict.partition_witness = std::move(w);
    } else {
      t.note("R7", kCiteQuotient,
             "no valid partition found by the exhaustive search (this reports "
             "'none found', not 'none exists')");
    }
  }

  // Never ship an unverified NOT_NL.
  if (t.verdict.status == NLStatus::NotNL &&
      !recheck_witness(g, t.verdict, opts.loxodromic_margin))
    throw std::logic_error("internal soundness failure: NOT_NL witness did not verify");

  return t.verdict;
}

std::string verdict_to_json(const CoxeterGraph& g, const NLVerdict& v) {
  json doc;
  doc["status"] = nl_status_name(v.status);
  doc["trace"] = json::array();
  for (const auto& f : v.trace)
    doc["trace"].push_back({{"rule", f.rule}, {"cite", f.cite}, {"reason", f.reason}});
  doc["witness"] = witness_json(g, v);
  return doc.dump(2) + "\n";
}

std::string verdict_to_text(const CoxeterGraph& g, const NLVerdict& v) {
  std::ostringstream out;
  out << "status: " << nl_status_name(v.status) << "\n";
  out << "trace:\n";
  for (const auto& f : v.trace)
    out << "  " << f.rule << "  [" << f.cite << "]  " << f.reason << "\n";
  if (v.partition_witness) {
    const auto& w = *v.partition_witness;
    out << "witness: epimorphism onto D_infinity with A = " << set_to_string(g, w.A)
        << ", B = " << set_to_string(g, w.B) << ", K = " << set_to_string(g, w.K)
        << "\n";
  } else if (v.matrix_witness) {
    const auto& c = *v.matrix_witness;
    out.precision(17);
    out << "witness: loxodromic word '" << word_to_string(g, c.word)
        << "' with spectral radius " << c.spectral_radius << " (translation length "
        << c.translation_length << ")\n";
  } else {
    out << "witness: none\n";
  }
  return out.str();
}

}  // namespace nlcox
