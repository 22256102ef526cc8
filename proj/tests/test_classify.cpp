#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <random>

#include "nlcox/classify.hpp"
#include "nlcox/georep.hpp"

using namespace nlcox;

namespace {

std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

CoxeterGraph triangle(int l, int m, int n) {
  CoxeterGraph g(std::vector<std::string>{"a", "b", "c"});
  g.set_label(0, 1, l);
  g.set_label(0, 2, m);
  g.set_label(1, 2, n);
  return g;
}

const RuleFiring& decisive(const NLVerdict& v) {
  REQUIRE_FALSE(v.trace.empty());
  return v.trace.back();
}

// ---- Smith-normal-form oracle for the abelianization ------------------------
//
// The abelianization of the Coxeter group is Z^n modulo the rows 2 e_i and
// m_ij (e_i + e_j); its invariant factors come from the integer Smith normal
// form. Used only to cross-check odd-component counting.
struct SnfResult {
  int free_rank = 0;
  int z2_rank = 0;
  bool only_z2_torsion = true;
};

SnfResult snf_abelianization(const CoxeterGraph& g) {
  const int n = g.size();
  std::vector<std::vector<long long>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i)] = 2;
    rows.push_back(std::move(r));
  }
  for (const auto& [i, j, m] : g.edges()) {
    std::vector<long long> r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i)] = m;
    r[static_cast<std::size_t>(j)] = m;
    rows.push_back(std::move(r));
  }
  const int R = static_cast<int>(rows.size());
  auto& A = rows;
  int t = 0;
  std::vector<long long> diag;
  while (t < std::min(R, n)) {
    int pi = -1, pj = -1;
    for (int i = t; i < R; ++i)
      for (int j = t; j < n; ++j)
        if (A[i][j] != 0 &&
            (pi < 0 || std::abs(A[i][j]) < std::abs(A[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(A[t], A[pi]);
    for (int i = 0; i < R; ++i) std::swap(A[i][t], A[i][pj]);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < R; ++i) {
        if (A[i][t] == 0) continue;
        const long long q = A[i][t] / A[t][t];
        for (int j = t; j < n; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) {
          std::swap(A[t], A[i]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        const long long q = A[t][j] / A[t][t];
        for (int i = 0; i < R; ++i) A[i][j] -= q * A[i][t];
        if (A[t][j] != 0) {
          for (int i = 0; i < R; ++i) std::swap(A[i][t], A[i][j]);
          dirty = true;
        }
      }
    }
    diag.push_back(std::abs(A[t][t]));
    ++t;
  }
  SnfResult res;
  res.free_rank = n - static_cast<int>(diag.size());
  for (long long d : diag) {
    if (d == 2) ++res.z2_rank;
    else if (d != 1) res.only_z2_torsion = false;
  }
  return res;
}

}  // namespace

TEST_CASE("triangle trichotomy is exact") {
  const TriangleClass sph = classify_triangle(2, 3, 5);
  CHECK(sph.geometry == TriangleGeometry::Spherical);
  CHECK(sph.angle_sum_num == 31);
  CHECK(sph.angle_sum_den == 30);

  const TriangleClass euc = classify_triangle(4, 2, 4);  // sorts to (2,4,4)
  CHECK(euc.geometry == TriangleGeometry::Euclidean);
  CHECK(euc.l == 2);
  CHECK(euc.m == 4);
  CHECK(euc.n == 4);
  CHECK(euc.angle_sum_num == 1);
  CHECK(euc.angle_sum_den == 1);

  const TriangleClass hyp = classify_triangle(2, 3, 7);
  CHECK(hyp.geometry == TriangleGeometry::Hyperbolic);
  CHECK(hyp.angle_sum_num == 41);
  CHECK(hyp.angle_sum_den == 42);

  CHECK_THROWS_AS(classify_triangle(1, 3, 3), GraphError);

  // Exact even at the label cap.
  CHECK(classify_triangle(2, 2, kMaxLabel).geometry == TriangleGeometry::Spherical);
  CHECK(classify_triangle(2, 3, kMaxLabel).geometry == TriangleGeometry::Hyperbolic);
}

TEST_CASE("classify_nl on the named examples") {
  // Complete right-angled K4.
  CoxeterGraph k4(names(4));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.set_label(i, j, 2);
  const NLVerdict vk4 = classify_nl(k4);
  CHECK(vk4.status == NLStatus::NL);
  CHECK(decisive(vk4).rule == "R2-complete");
  CHECK_FALSE(vk4.partition_witness.has_value());

  // Two vertices, no edge: the infinite dihedral group. The fixed rule order
  // makes the disconnected rule decisive; the witness is the expected one.
  const CoxeterGraph dinf = parse_graph("vertices: s1 s2\n", GraphFormat::Text);
  const NLVerdict vd = classify_nl(dinf);
  CHECK(vd.status == NLStatus::NotNL);
  CHECK(decisive(vd).rule == "R1");
  REQUIRE(vd.partition_witness.has_value());
  CHECK(vd.partition_witness->A == std::vector<int>{0});
  CHECK(vd.partition_witness->B == std::vector<int>{1});
  CHECK(vd.partition_witness->K.empty());

  // Hyperbolic triangle: matrix witness.
  const NLVerdict v237 = classify_nl(triangle(2, 3, 7));
  CHECK(v237.status == NLStatus::NotNL);
  CHECK(decisive(v237).rule == "R5-hyperbolic");
  REQUIRE(v237.matrix_witness.has_value());
  CHECK(v237.matrix_witness->spectral_radius > 1.0 + 1e-6);

  // Euclidean triangle.
  const NLVerdict v236 = classify_nl(triangle(2, 3, 6));
  CHECK(v236.status == NLStatus::NL);
  CHECK(decisive(v236).rule == "R5-euclidean");

  // Connected, even labels, incomplete: the partition search fires.
  const CoxeterGraph path44 =
      parse_graph("vertices: a b c\nedge a b 4\nedge b c 4\n", GraphFormat::Text);
  const NLVerdict v44 = classify_nl(path44);
  CHECK(v44.status == NLStatus::NotNL);
  CHECK(decisive(v44).rule == "R7");
  REQUIRE(v44.partition_witness.has_value());
  CHECK(v44.partition_witness->A == std::vector<int>{0});
  CHECK(v44.partition_witness->B == std::vector<int>{2});
  CHECK(v44.partition_witness->K == std::vector<int>{1});

  // Odd label next to the missing edge: nothing applies.
  const CoxeterGraph path34 =
      parse_graph("vertices: a b c\nedge a b 3\nedge b c 4\n", GraphFormat::Text);
  const NLVerdict v34 = classify_nl(path34);
  CHECK(v34.status == NLStatus::Unknown);
  CHECK(v34.trace.size() == 7);
  CHECK_FALSE(v34.partition_witness.has_value());
  CHECK_FALSE(v34.matrix_witness.has_value());

  // Single vertex: right-angled and complete vacuously.
  const NLVerdict v1 = classify_nl(parse_graph("vertices: a\n", GraphFormat::Text));
  CHECK(v1.status == NLStatus::NL);
  CHECK(decisive(v1).rule == "R2-complete");

  // Two vertices with a finite odd label: dihedral, decided by R4.
  const CoxeterGraph s3 =
      parse_graph("vertices: s1 s2\nedge s1 s2 3\n", GraphFormat::Text);
  const NLVerdict vs3 = classify_nl(s3);
  CHECK(vs3.status == NLStatus::NL);
  CHECK(decisive(vs3).rule == "R4-complete");

  // A complete graph of finite type beyond three vertices: A4, reached by R6.
  CoxeterGraph a4(names(4));
  a4.set_label(0, 1, 3);
  a4.set_label(1, 2, 3);
  a4.set_label(2, 3, 3);
  a4.set_label(0, 2, 2);
  a4.set_label(0, 3, 2);
  a4.set_label(1, 3, 2);
  const NLVerdict va4 = classify_nl(a4);
  CHECK(va4.status == NLStatus::NL);
  CHECK(decisive(va4).rule == "R6-finite");
}

TEST_CASE("graphs beyond the search capacity fall through to UNKNOWN") {
  // 21 vertices: a connected path of 3-labels, not right-angled, so only the
  // capacity-limited rules could decide; they are skipped, not errors.
  CoxeterGraph g(names(21));
  for (int i = 0; i + 1 < 21; ++i) g.set_label(i, i + 1, 3);
  const NLVerdict v = classify_nl(g);
  CHECK(v.status == NLStatus::Unknown);
  REQUIRE(v.trace.size() == 7);
  CHECK(v.trace[5].reason.find("skipped") != std::string::npos);
  CHECK(v.trace[6].reason.find("skipped") != std::string::npos);
}

TEST_CASE("NL verdicts always cite one of the allowed decisive rules") {
  const std::vector<std::string> allowed = {"R2-complete", "R4-complete",
                                            "R5-spherical", "R5-euclidean",
                                            "R6-finite"};
  std::mt19937 rng(20250101u);
  std::uniform_int_distribution<int> n_dist(1, 6);
  std::uniform_int_distribution<int> label_dist(0, 5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = n_dist(rng);
    CoxeterGraph g(names(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int pick = label_dist(rng);
        if (pick > 0) g.set_label(i, j, pick + 1);
      }
    const NLVerdict v = classify_nl(g);
    if (v.status == NLStatus::NL) {
      CHECK(std::count(allowed.begin(), allowed.end(), decisive(v).rule) == 1);
      CHECK_FALSE(v.partition_witness.has_value());
      CHECK_FALSE(v.matrix_witness.has_value());
    }
    if (v.status == NLStatus::NotNL) {
      CHECK(recheck_witness(g, v));
    }
  }
}

TEST_CASE("classification status is invariant under vertex relabeling") {
  std::mt19937 rng(303u);
  std::uniform_int_distribution<int> n_dist(1, 6);
  std::uniform_int_distribution<int> label_dist(0, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = n_dist(rng);
    CoxeterGraph g(names(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int pick = label_dist(rng);
        if (pick > 0) g.set_label(i, j, pick + 1);
      }
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CoxeterGraph h(names(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.has_edge(i, j))
          h.set_label(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(j)], g.label(i, j));
    CHECK(classify_nl(g).status == classify_nl(h).status);
  }
}

TEST_CASE("verify_epimorphism checks relators semantically") {
  const CoxeterGraph dinf = parse_graph("vertices: s1 s2\n", GraphFormat::Text);
  CHECK(verify_epimorphism(dinf, {{0}, {1}, {}}));

  // (ab)^3 maps to a nontrivial translation.
  CHECK_FALSE(verify_epimorphism(triangle(3, 3, 3), {{0}, {1}, {2}}));

  // Image must contain two distinct reflections.
  const CoxeterGraph edgeless = parse_graph("vertices: a b c\n", GraphFormat::Text);
  CHECK_FALSE(verify_epimorphism(edgeless, {{}, {}, {0, 1, 2}}));
  CHECK_FALSE(verify_epimorphism(edgeless, {{0, 1, 2}, {}, {}}));
  CHECK(verify_epimorphism(edgeless, {{0}, {1}, {2}}));

  // Odd label from K into A breaks the relator (r 1)^3 = r.
  const CoxeterGraph odd_k =
      parse_graph("vertices: a b c\nedge a b 3\n", GraphFormat::Text);
  CHECK_FALSE(verify_epimorphism(odd_k, {{0}, {2}, {1}}));
  // Even label from K is fine.
  const CoxeterGraph even_k =
      parse_graph("vertices: a b c\nedge a b 4\n", GraphFormat::Text);
  CHECK(verify_epimorphism(even_k, {{0}, {2}, {1}}));

  CHECK_THROWS_AS(verify_epimorphism(dinf, {{0}, {}, {}}), std::invalid_argument);
}

TEST_CASE("partition search: found witnesses verify, complete graphs yield none") {
  const CoxeterGraph path44 =
      parse_graph("vertices: a b c\nedge a b 4\nedge b c 4\n", GraphFormat::Text);
  const auto w = find_dinfty_epimorphism(path44);
  REQUIRE(w.has_value());
  CHECK(w->A == std::vector<int>{0});
  CHECK(w->B == std::vector<int>{2});
  CHECK(w->K == std::vector<int>{1});
  CHECK(verify_epimorphism(path44, *w));

  const CoxeterGraph path34 =
      parse_graph("vertices: a b c\nedge a b 3\nedge b c 4\n", GraphFormat::Text);
  CHECK_FALSE(find_dinfty_epimorphism(path34).has_value());

  std::mt19937 rng(606u);
  std::uniform_int_distribution<int> n_dist(1, 6);
  std::uniform_int_distribution<int> label_dist(2, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = n_dist(rng);
    CoxeterGraph g(names(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.set_label(i, j, label_dist(rng));
    CHECK_FALSE(find_dinfty_epimorphism(g).has_value());
  }

  // Any witness found on random graphs passes the semantic check.
  std::uniform_int_distribution<int> sparse(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = n_dist(rng);
    CoxeterGraph g(names(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int pick = sparse(rng);
        if (pick >= 2) g.set_label(i, j, pick);
      }
    if (auto found = find_dinfty_epimorphism(g)) CHECK(verify_epimorphism(g, *found));
  }

  CHECK_THROWS_AS(find_dinfty_epimorphism(CoxeterGraph(names(21))), CapacityError);
}

TEST_CASE("abelianization rank matches the Smith-normal-form oracle") {
  auto check_graph = [](const CoxeterGraph& g) {
    const AbelianizationInfo info = surjects_onto_z(g);
    const SnfResult snf = snf_abelianization(g);
    REQUIRE_FALSE(info.surjects);
    REQUIRE(snf.free_rank == 0);  // never surjects onto Z
    REQUIRE(snf.only_z2_torsion);
    REQUIRE(info.z2_rank == snf.z2_rank);
  };

  check_graph(triangle(3, 3, 3));  // rank 1
  CHECK(surjects_onto_z(triangle(3, 3, 3)).z2_rank == 1);

  CoxeterGraph k3(names(3));
  k3.set_label(0, 1, 2);
  k3.set_label(0, 2, 2);
  k3.set_label(1, 2, 2);
  check_graph(k3);
  CHECK(surjects_onto_z(k3).z2_rank == 3);

  const CoxeterGraph dinf = parse_graph("vertices: s1 s2\n", GraphFormat::Text);
  check_graph(dinf);
  CHECK(surjects_onto_z(dinf).z2_rank == 2);

  std::mt19937 rng(909u);
  std::uniform_int_distribution<int> n_dist(1, 5);
  std::uniform_int_distribution<int> label_dist(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = n_dist(rng);
    CoxeterGraph g(names(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int pick = label_dist(rng);
        if (pick > 0) g.set_label(i, j, pick + 1);
      }
    check_graph(g);
  }
}

TEST_CASE("finite-type recognition on catalog members and non-members") {
  auto path_graph = [](const std::vector<int>& labels) {
    // Complete graph whose consecutive labels are given and all other pairs
    // commute: the standard embedding of a linear diagram.
    const int n = static_cast<int>(labels.size()) + 1;
    CoxeterGraph g(names(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        g.set_label(i, j, j == i + 1 ? labels[static_cast<std::size_t>(i)] : 2);
    return g;
  };

  // Spherical triangles are finite, euclidean ones are not.
  CHECK(is_finite_coxeter(triangle(2, 3, 3)));  // the A3 path
  CHECK_FALSE(is_finite_coxeter(triangle(2, 3, 6)));
  // Complete right-angled graphs decompose into singleton components.
  for (int n = 1; n <= 5; ++n) {
    CoxeterGraph g(names(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.set_label(i, j, 2);
    CHECK(is_finite_coxeter(g));
  }

  CHECK(is_finite_coxeter(path_graph({3, 3, 3})));        // A4
  CHECK(is_finite_coxeter(path_graph({4, 3, 3})));        // B4
  CHECK(is_finite_coxeter(path_graph({3, 4, 3})));        // F4
  CHECK(is_finite_coxeter(path_graph({5, 3})));           // H3
  CHECK(is_finite_coxeter(path_graph({5, 3, 3})));        // H4
  CHECK_FALSE(is_finite_coxeter(path_graph({5, 3, 3, 3})));  // H5 does not exist
  CHECK_FALSE(is_finite_coxeter(path_graph({3, 4, 3, 3})));  // affine F4 tail
  CHECK_FALSE(is_finite_coxeter(path_graph({4, 3, 4})));     // affine C3
  CHECK_FALSE(is_finite_coxeter(path_graph({6, 3})));        // affine G2
  CHECK_FALSE(is_finite_coxeter(path_graph({3, 6})));

  // D4: one branch vertex with three short legs, all labels 3.
  CoxeterGraph d4(names(4));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) d4.set_label(i, j, i == 0 ? 3 : 2);
  CHECK(is_finite_coxeter(d4));

  // Affine A3: a 4-cycle of 3s is not a tree.
  CoxeterGraph cyc(names(4));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const bool on_cycle = j == i + 1 || (i == 0 && j == 3);
      cyc.set_label(i, j, on_cycle ? 3 : 2);
    }
  CHECK_FALSE(is_finite_coxeter(cyc));

  // Any absent pair is an infinite dihedral subgroup.
  CHECK_FALSE(is_finite_coxeter(parse_graph("vertices: a b\n", GraphFormat::Text)));

  // Products of finite components are finite.
  CHECK(is_finite_coxeter(path_graph({2, 2, 2, 2})));  // (Z/2)^5
  CoxeterGraph two_i2(names(4));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      int m = 2;
      if (i == 0 && j == 1) m = 7;
      if (i == 2 && j == 3) m = 9;
      two_i2.set_label(i, j, m);
    }
  CHECK(is_finite_coxeter(two_i2));

  CHECK_THROWS_AS(is_finite_coxeter(CoxeterGraph(names(21))), CapacityError);
}

TEST_CASE("finite-type recognition on the branched catalog members") {
  // Complete graph whose tree edges carry 3 and every other pair commutes.
  auto simply_laced = [](int n, const std::vector<std::pair<int, int>>& tree) {
    CoxeterGraph g(names(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const bool on_tree =
            std::count(tree.begin(), tree.end(), std::make_pair(i, j)) > 0;
        g.set_label(i, j, on_tree ? 3 : 2);
      }
    return g;
  };

  // A5 and D5.
  CHECK(is_finite_coxeter(simply_laced(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
  CHECK(is_finite_coxeter(simply_laced(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}})));

  // E6, E7, E8: a path with one extra node hanging off the third vertex.
  auto e_series = [&](int n) {
    std::vector<std::pair<int, int>> tree;
    for (int i = 0; i + 2 < n; ++i) tree.push_back({i, i + 1});
    tree.push_back({2, n - 1});
    return simply_laced(n, tree);
  };
  CHECK(is_finite_coxeter(e_series(6)));
  CHECK(is_finite_coxeter(e_series(7)));
  CHECK(is_finite_coxeter(e_series(8)));
  CHECK_FALSE(is_finite_coxeter(e_series(9)));  // affine E8

  // Affine counterexamples around the branch vertex.
  CHECK_FALSE(is_finite_coxeter(
      simply_laced(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})));  // degree 4: affine D4
  CHECK_FALSE(is_finite_coxeter(simply_laced(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}})));  // legs (2,2,2): affine E6
  CHECK_FALSE(is_finite_coxeter(simply_laced(
      6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}})));  // two branch vertices
}

TEST_CASE("finite-type lookup agrees with Gram positive definiteness, n <= 4") {
  // Labels over {2..7, infinity}, every graph on up to 4 vertices.
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int npairs = static_cast<int>(pairs.size());
    long long total = 1;
    for (int e = 0; e < npairs; ++e) total *= 7;
    for (long long code = 0; code < total; ++code) {
      CoxeterGraph g(names(n));
      long long rest = code;
      for (const auto& [i, j] : pairs) {
        const int pick = static_cast<int>(rest % 7);
        rest /= 7;
        if (pick > 0) g.set_label(i, j, pick + 1);  // 0 = absent, else 2..7
      }
      const Eigen::MatrixXd B = georep::gram_matrix(g);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B, Eigen::EigenvaluesOnly);
      const bool positive_definite = es.eigenvalues().minCoeff() > 1e-9;
      REQUIRE(is_finite_coxeter(g) == positive_definite);
    }
  }
}

TEST_CASE("verdict JSON carries the schema and is deterministic") {
  const CoxeterGraph path44 =
      parse_graph("vertices: a b c\nedge a b 4\nedge b c 4\n", GraphFormat::Text);
  const NLVerdict v = classify_nl(path44);
  const std::string js = verdict_to_json(path44, v);
  CHECK(js.find("\"status\": \"NOT_NL\"") != std::string::npos);
  CHECK(js.find("\"rule\": \"R7\"") != std::string::npos);
  CHECK(js.find("\"type\": \"epimorphism\"") != std::string::npos);
  CHECK(js == verdict_to_json(path44, classify_nl(path44)));

  const CoxeterGraph t = triangle(2, 3, 7);
  const std::string js2 = verdict_to_json(t, classify_nl(t));
  CHECK(js2.find("\"type\": \"loxodromic\"") != std::string::npos);
  CHECK(js2.find("\"spectral_radius\"") != std::string::npos);
  CHECK(js2.find("\"matrix\"") != std::string::npos);

  const std::string text = verdict_to_text(t, classify_nl(t));
  CHECK(text.find("status: NOT_NL") != std::string::npos);
  CHECK(text.find("Proposition 4.8") != std::string::npos);
}
