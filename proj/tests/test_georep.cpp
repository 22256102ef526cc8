#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nlcox/georep.hpp"
#include "nlcox/triangle.hpp"

using namespace nlcox;
namespace geo = nlcox::georep;

namespace {

CoxeterGraph triangle(int l, int m, int n) {
  CoxeterGraph g(std::vector<std::string>{"a", "b", "c"});
  g.set_label(0, 1, l);
  g.set_label(0, 2, m);
  g.set_label(1, 2, n);
  return g;
}

CoxeterGraph dihedral(int m) {
  CoxeterGraph g(std::vector<std::string>{"a", "b"});
  g.set_label(0, 1, m);
  return g;
}

constexpr double kRho237Abc = 1.635573129922221;  // frozen from the eigen oracle

}  // namespace

TEST_CASE("gram matrices of the named graphs") {
  const CoxeterGraph dinf = parse_graph("vertices: a b\n", GraphFormat::Text);
  const Eigen::MatrixXd B1 = geo::gram_matrix(dinf);
  CHECK(B1(0, 0) == 1.0);
  CHECK(B1(0, 1) == -1.0);
  CHECK(B1(1, 0) == -1.0);

  const Eigen::MatrixXd B2 = geo::gram_matrix(dihedral(2));
  CHECK((B2 - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);

  const Eigen::MatrixXd B3 = geo::gram_matrix(triangle(2, 3, 6));
  CHECK(B3(0, 1) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(B3(0, 2) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(B3(1, 2) == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK((B3 - B3.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("simple reflections are involutions and realize the labels") {
  for (int m = 2; m <= 12; ++m) {
    const CoxeterGraph g = dihedral(m);
    const Eigen::MatrixXd s0 = geo::simple_reflection(g, 0);
    const Eigen::MatrixXd s1 = geo::simple_reflection(g, 1);
    CHECK((s0 * s0 - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((s1 * s1 - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(2, 2);
    for (int k = 1; k <= m; ++k) {
      p = p * (s0 * s1);
      const double d = (p - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff();
      if (k < m)
        CHECK(d > 1e-3);
      else
        CHECK(d <= 1e-8);
    }
  }
  // (sigma_1 sigma_2)^3 = I on the (3,3,3) triangle.
  const CoxeterGraph t = triangle(3, 3, 3);
  const Eigen::MatrixXd prod =
      geo::simple_reflection(t, 0) * geo::simple_reflection(t, 1);
  CHECK((prod * prod * prod - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <=
        1e-9);
  CHECK_THROWS_AS(geo::simple_reflection(t, 3), GraphError);
}

TEST_CASE("word matrices preserve the Gram form") {
  CHECK(geo::word_to_matrix(triangle(2, 3, 7), {}).isIdentity(1e-15));
  CHECK(geo::word_to_matrix(triangle(2, 3, 7), {1, 1}).isIdentity(1e-12));

  std::mt19937 rng(99u);
  std::uniform_int_distribution<int> n_dist(1, 4);
  std::uniform_int_distribution<int> label_dist(0, 6);
  std::uniform_int_distribution<int> len_dist(0, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = n_dist(rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    CoxeterGraph g(names);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int pick = label_dist(rng);
        if (pick > 0) g.set_label(i, j, pick + 1);
      }
    Word w;
    std::uniform_int_distribution<int> letter(0, n - 1);
    const int len = len_dist(rng);
    for (int k = 0; k < len; ++k) w.push_back(letter(rng));
    const Eigen::MatrixXd M = geo::word_to_matrix(g, w);
    // Roundoff in the product grows with the matrix scale, so the bound is
    // taken relative to ||M||^2; for O(1) matrices it is the plain 1e-8.
    const double scale = std::max(1.0, std::pow(M.cwiseAbs().maxCoeff(), 2));
    REQUIRE(geo::form_residual(g, M) <= 1e-8 * scale);
  }
}

TEST_CASE("signatures of the three geometries") {
  CHECK(geo::gram_signature(triangle(2, 3, 5)) == geo::Signature{3, 0, 0});
  CHECK(geo::gram_signature(triangle(2, 3, 6)) == geo::Signature{2, 1, 0});
  CHECK(geo::gram_signature(triangle(2, 3, 7)) == geo::Signature{2, 0, 1});
  // The D_infinity form [[1,-1],[-1,1]] has eigenvalues {0, 2}.
  const CoxeterGraph dinf = parse_graph("vertices: a b\n", GraphFormat::Text);
  CHECK(geo::gram_signature(dinf) == geo::Signature{1, 1, 0});
  CHECK_THROWS_AS(geo::signature(Eigen::MatrixXd::Ones(2, 3)), NumericError);
}

TEST_CASE("spectral radius: fixed points and the frozen (2,3,7) value") {
  CHECK(geo::spectral_radius(Eigen::MatrixXd::Identity(4, 4)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const CoxeterGraph t = triangle(2, 3, 7);
  for (int i = 0; i < 3; ++i)
    CHECK(geo::spectral_radius(geo::simple_reflection(t, i)) ==
          doctest::Approx(1.0).epsilon(1e-10));
  const double rho = geo::spectral_radius(geo::word_to_matrix(t, {0, 1, 2}));
  CHECK(std::abs(rho - kRho237Abc) <= 1e-6 * kRho237Abc);
}

TEST_CASE("characteristic-cubic route agrees with the eigensolver") {
  // Word matrices in hyperbolic triangle groups have well-separated spectra.
  for (const auto& [l, m, n] : std::vector<std::array<int, 3>>{
           {2, 3, 7}, {2, 4, 5}, {3, 3, 4}, {4, 4, 4}, {2, 3, 12}}) {
    const CoxeterGraph g = triangle(l, m, n);
    for (const Word& w : std::vector<Word>{{0, 1, 2}, {2, 1, 0}, {0, 1, 2, 0, 1, 2},
                                           {1, 2, 0, 1}}) {
      const Eigen::Matrix3d M = geo::word_to_matrix(g, w);
      const double a = geo::spectral_radius(M);
      const double b = geo::spectral_radius_cubic(M);
      REQUIRE(std::abs(a - b) <= 1e-9 * std::max(1.0, a));
    }
  }
  // Generic random matrices, looser tolerance near repeated roots.
  std::mt19937 rng(12345u);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int trial = 0; trial < 2000; ++trial) {
    Eigen::Matrix3d M;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M(i, j) = entry(rng);
    const double a = geo::spectral_radius(M);
    const double b = geo::spectral_radius_cubic(M);
    REQUIRE(std::abs(a - b) <= 1e-5 * std::max(1.0, a));
  }
}

TEST_CASE("loxodromic certification") {
  const CoxeterGraph t237 = triangle(2, 3, 7);
  const auto cert = geo::loxodromic_certificate(t237, {0, 1, 2});
  REQUIRE(cert.has_value());
  CHECK(cert->spectral_radius > 1.0 + 1e-6);
  CHECK(cert->translation_length == doctest::Approx(std::log(cert->spectral_radius)));

  CHECK_FALSE(geo::loxodromic_certificate(t237, {0}).has_value());  // reflection
  CHECK_FALSE(geo::loxodromic_certificate(t237, {}).has_value());   // identity

  CHECK_THROWS_AS(geo::loxodromic_certificate(triangle(3, 3, 3), {0, 1, 2}),
                  std::invalid_argument);  // euclidean rejected by precondition
  const CoxeterGraph incomplete =
      parse_graph("vertices: a b c\nedge a b 7\n", GraphFormat::Text);
  CHECK_THROWS_AS(geo::loxodromic_certificate(incomplete, {0, 1}),
                  std::invalid_argument);

  // Deterministic search: (2,3,7) certifies first at the word abc.
  const auto found = geo::find_loxodromic_certificate(t237);
  REQUIRE(found.has_value());
  CHECK(found->word == Word{0, 1, 2});
}

TEST_CASE("every hyperbolic triangle with labels <= 12 certifies by length 6") {
  for (int l = 2; l <= 12; ++l)
    for (int m = l; m <= 12; ++m)
      for (int n = m; n <= 12; ++n) {
        if (classify_triangle(l, m, n).geometry != TriangleGeometry::Hyperbolic)
          continue;
        const auto cert = geo::find_loxodromic_certificate(triangle(l, m, n));
        REQUIRE_MESSAGE(cert.has_value(), "no certificate for (" << l << "," << m
                                                                 << "," << n << ")");
        REQUIRE(cert->word.size() <= 6);
      }
}

TEST_CASE("euclidean words stay flat (short-word smoke test)") {
  const CoxeterGraph g = triangle(3, 3, 3);
  std::vector<Eigen::MatrixXd> gen;
  for (int i = 0; i < 3; ++i) gen.push_back(geo::simple_reflection(g, i));
  double worst = 0.0;
  auto dfs = [&](auto&& self, const Eigen::MatrixXd& acc, int depth) -> void {
    if (depth > 0) worst = std::max(worst, std::abs(geo::spectral_radius(acc) - 1.0));
    if (depth == 5) return;
    for (const auto& s : gen) self(self, acc * s, depth + 1);
  };
  dfs(dfs, Eigen::MatrixXd::Identity(3, 3), 0);
  CHECK(worst <= 1e-4);
}
