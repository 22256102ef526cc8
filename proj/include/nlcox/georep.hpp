#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <optional>

#include "nlcox/coxeter_graph.hpp"
#include "nlcox/triangle.hpp"

// Geometric (reflection) representation of a Coxeter graph: the Gram form
// B with B_ii = 1 and B_ij = -cos(pi/m_ij) (-1 for absent pairs), the simple
// reflections preserving it, and spectral certification of loxodromic
// elements in the hyperbolic-triangle case.
namespace nlcox::georep {

inline constexpr double kZeroTol = 1e-9;          // signature zero band
inline constexpr double kFormTol = 1e-9;          // M^T B M = B residual
inline constexpr double kLoxodromicMargin = 1e-6; // rho must exceed 1 + margin

template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gram_matrix(
    const CoxeterGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> B =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const int m = g.label(static_cast<int>(i), static_cast<int>(j));
      const Scalar v = m == kInfiniteLabel
                           ? Scalar(-1)
                           : -std::cos(std::numbers::pi_v<Scalar> / Scalar(m));
      B(i, j) = v;
      B(j, i) = v;
    }
  }
  return B;
}

// Matrix of the simple reflection sigma_i: alpha_j -> alpha_j - 2 B_ij alpha_i,
// i.e. the identity except in row i.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> simple_reflection(
    const CoxeterGraph& g, int i) {
  if (i < 0 || i >= g.size())
    throw GraphError("generator index " + std::to_string(i) + " out of range");
  const auto B = gram_matrix<Scalar>(g);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> M =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(B.rows(),
                                                                      B.cols());
  M.row(i) -= Scalar(2) * B.row(i);
  return M;
}

// Product of simple reflections, left letter applied last (the same
// composition convention as the dinfty module).
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> word_to_matrix(
    const CoxeterGraph& g, const Word& word) {
  check_word(g, word);
  const auto n = static_cast<Eigen::Index>(g.size());
  const auto B = gram_matrix<Scalar>(g);
  std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> gen;
  gen.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < g.size(); ++i) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> M =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
    M.row(i) -= Scalar(2) * B.row(i);
    gen.push_back(std::move(M));
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> acc =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
  for (int letter : word) acc = acc * gen[static_cast<std::size_t>(letter)];
  return acc;
}

// max-abs entry of M^T B M - B.
double form_residual(const CoxeterGraph& g, const Eigen::MatrixXd& M);

struct Signature {
  int positive = 0;
  int zero = 0;
  int negative = 0;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.zero == b.zero && a.negative == b.negative;
  }
};

// Eigenvalue counts of a symmetric matrix against the zero band [-tol, tol].
// An eigenvalue in the shadow band (tol, 10*tol] makes the counts unreliable;
// the band is widened tenfold and the count retried once, after which a
// NumericError is thrown.
Signature signature(const Eigen::MatrixXd& B, double zero_tol = kZeroTol);

// signature() of the graph's Gram form, with one extra escape hatch: if the
// counts stay ambiguous and the graph is a complete 3-vertex graph, the exact
// rational trichotomy settles the signature (the only rank-3 semidefinite
// forms are the three Euclidean triangles).
Signature gram_signature(const CoxeterGraph& g, double zero_tol = kZeroTol);

// Largest eigenvalue modulus, by dense eigensolve. Throws NumericError when
// the iteration fails to converge.
double spectral_radius(const Eigen::MatrixXd& M);

// Same quantity through the closed-form roots of the characteristic cubic;
// 3x3 only. Independent of the eigensolver path.
double spectral_radius_cubic(const Eigen::Matrix3d& M);

struct LoxodromicCertificate {
  Word word;
  Eigen::MatrixXd matrix;
  double spectral_radius = 0.0;
  double translation_length = 0.0;  // log of the spectral radius
};

// Certifies that `word` acts loxodromically on the hyperbolic plane tiled by
// the triangle group of g: requires ambient Gram signature (2,0,1), checks
// form preservation, and demands rho > 1 + margin with the eigensolver and
// cubic routes in agreement. Preconditions (complete 3-vertex hyperbolic
// graph) throw std::invalid_argument.
std::optional<LoxodromicCertificate> loxodromic_certificate(
    const CoxeterGraph& g, const Word& word, double margin = kLoxodromicMargin,
    double zero_tol = kZeroTol);

// First certified word in length-then-lexicographic order (deterministic).
std::optional<LoxodromicCertificate> find_loxodromic_certificate(
    const CoxeterGraph& g, int max_length = 6, double margin = kLoxodromicMargin,
    double zero_tol = kZeroTol);

}  // namespace nlcox::georep
