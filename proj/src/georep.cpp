#include "nlcox/georep.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace nlcox::georep {

namespace {

// Counts eigenvalues of a symmetric matrix against the band [-tol, tol].
// Returns nullopt when some |eigenvalue| lands in (tol, 10*tol], where a
// roundoff-sized shift could move it across the band edge.
std::optional<Signature> try_count(const Eigen::VectorXd& ev, double tol) {
  Signature sig;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double a = std::abs(ev(i));
    if (a > tol && a <= 10.0 * tol) return std::nullopt;
    if (ev(i) > tol)
      ++sig.positive;
    else if (ev(i) < -tol)
      ++sig.negative;
    else
      ++sig.zero;
  }
  return sig;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& B) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(B, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("symmetric eigenvalue solve did not converge");
  return solver.eigenvalues();
}

bool is_complete_triangle(const CoxeterGraph& g) {
  return g.size() == 3 && is_complete(g);
}

}  // namespace

double form_residual(const CoxeterGraph& g, const Eigen::MatrixXd& M) {
  const Eigen::MatrixXd B = gram_matrix(g);
  return (M.transpose() * B * M - B).cwiseAbs().maxCoeff();
}

Signature signature(const Eigen::MatrixXd& B, double zero_tol) {
  if (B.rows() != B.cols()) throw NumericError("signature of a non-square matrix");
  if ((B - B.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw NumericError("signature of a non-symmetric matrix");
  const Eigen::VectorXd ev = symmetric_eigenvalues(B);
  if (auto sig = try_count(ev, zero_tol)) return *sig;
  if (auto sig = try_count(ev, 10.0 * zero_tol)) return *sig;
  throw NumericError("eigenvalue inside the signature ambiguity band");
}

Signature gram_signature(const CoxeterGraph& g, double zero_tol) {
  try {
    return signature(gram_matrix(g), zero_tol);
  } catch (const NumericError&) {
    if (!is_complete_triangle(g)) throw;
  }
  // Rank 3, all labels finite: the exact trichotomy settles the counts.
  const TriangleClass tc =
      classify_triangle(g.label(0, 1), g.label(0, 2), g.label(1, 2));
  switch (tc.geometry) {
    case TriangleGeometry::Spherical: return {3, 0, 0};
    case TriangleGeometry::Euclidean: return {2, 1, 0};
    case TriangleGeometry::Hyperbolic: return {2, 0, 1};
  }
  throw NumericError("unreachable");
}

double spectral_radius(const Eigen::MatrixXd& M) {
  if (M.rows() != M.cols()) throw NumericError("spectral radius of a non-square matrix");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(M, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericError("eigenvalue iteration did not converge");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_radius_cubic(const Eigen::Matrix3d& M) {
  // Characteristic polynomial lambda^3 - c2 lambda^2 + c1 lambda - c0.
  const double c2 = M.trace();
  const double c1 = (M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0)) +
                    (M(0, 0) * M(2, 2) - M(0, 2) * M(2, 0)) +
                    (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1));
  const double c0 = M.determinant();

  // Depress with lambda = t + c2/3: t^3 + p t + q.
  const double shift = c2 / 3.0;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = -2.0 * shift * shift * shift + c1 * shift - c0;
  const double disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);

  if (disc > 0.0) {
    // One real root and a conjugate pair.
    const double root = std::sqrt(disc);
    const double u = std::cbrt(-q / 2.0 + root);
    const double v = std::cbrt(-q / 2.0 - root);
    const double t1 = u + v;
    const double re = -t1 / 2.0 + shift;
    const double im = std::sqrt(3.0) / 2.0 * (u - v);
    return std::max(std::abs(t1 + shift), std::hypot(re, im));
  }

  // Three real roots (possibly repeated); disc <= 0 forces p <= 0.
  const double r = std::sqrt(std::max(0.0, -p / 3.0));
  if (r == 0.0) return std::abs(shift);  // triple root at the shift
  const double cos_arg = std::clamp(3.0 * q / (2.0 * p * r), -1.0, 1.0);
  const double theta = std::acos(cos_arg) / 3.0;
  double best = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double t = 2.0 * r * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
    best = std::max(best, std::abs(t + shift));
  }
  return best;
}

std::optional<LoxodromicCertificate> loxodromic_certificate(const CoxeterGraph& g,
                                                            const Word& word,
                                                            double margin,
                                                            double zero_tol) {
  if (!is_complete_triangle(g))
    throw std::invalid_argument(
        "loxodromic certification requires a complete 3-vertex graph");
  const TriangleClass tc =
      classify_triangle(g.label(0, 1), g.label(0, 2), g.label(1, 2));
  if (tc.geometry != TriangleGeometry::Hyperbolic)
    throw std::invalid_argument(
        "loxodromic certification requires a hyperbolic triangle graph");

  if (!(gram_signature(g, zero_tol) == Signature{2, 0, 1})) return std::nullopt;

  const Eigen::MatrixXd M = word_to_matrix(g, word);
  if (form_residual(g, M) > kFormTol)
    throw NumericError("word matrix does not preserve the Gram form");

  const double rho = spectral_radius(M);
  const double rho_cubic = spectral_radius_cubic(M);
  if (std::abs(rho - rho_cubic) > 1e-6 * std::max(1.0, rho))
    throw NumericError("eigensolver and characteristic-cubic spectral radii disagree");

  if (!(rho > 1.0 + margin)) return std::nullopt;
  LoxodromicCertificate cert;
  cert.word = word;
  cert.matrix = M;
  cert.spectral_radius = rho;
  cert.translation_length = std::log(rho);
  return cert;
}

std::optional<LoxodromicCertificate> find_loxodromic_certificate(
    const CoxeterGraph& g, int max_length, double margin, double zero_tol) {
  if (!is_complete_triangle(g))
    throw std::invalid_argument(
        "loxodromic certification requires a complete 3-vertex graph");
  const int n = g.size();
  std::vector<Eigen::MatrixXd> gen;
  for (int i = 0; i < n; ++i) gen.push_back(simple_reflection(g, i));

  // Shorter certificates always win; within a length the first word in
  // generator-index (lexicographic) order is returned.
  Word word;
  for (int len = 1; len <= max_length; ++len) {
    word.clear();
    auto dfs = [&](auto&& self, const Eigen::MatrixXd& acc,
                   int remaining) -> std::optional<LoxodromicCertificate> {
      if (remaining == 0) {
        if (spectral_radius(acc) > 1.0 + margin)
          return loxodromic_certificate(g, word, margin, zero_tol);
        return std::nullopt;
      }
      for (int i = 0; i < n; ++i) {
        word.push_back(i);
        auto hit = self(self, acc * gen[static_cast<std::size_t>(i)], remaining - 1);
        if (hit) return hit;
        word.pop_back();
      }
      return std::nullopt;
    };
    if (auto hit = dfs(dfs, Eigen::MatrixXd::Identity(n, n), len)) return hit;
  }
  return std::nullopt;
}

}  // namespace nlcox::georep
