#pragma once

#include <string>

#include "nlcox/errors.hpp"

namespace nlcox {

enum class TriangleGeometry { Spherical, Euclidean, Hyperbolic };

const char* triangle_geometry_name(TriangleGeometry g);

// Classification datum of the triangle group with edge labels {l, m, n}:
// the group tiles the sphere, the Euclidean plane, or the hyperbolic plane
// according as 1/l + 1/m + 1/n is greater than, equal to, or less than 1.
struct TriangleClass {
  int l = 2, m = 2, n = 2;  // sorted ascending
  TriangleGeometry geometry = TriangleGeometry::Spherical;
  long long angle_sum_num = 0;  // 1/l + 1/m + 1/n, reduced
  long long angle_sum_den = 1;

  std::string angle_sum_str() const;
};

// Exact rational trichotomy; comparisons are done in 128-bit integers, so
// there is no tolerance anywhere. Throws GraphError when a label is < 2.
TriangleClass classify_triangle(int l, int m, int n);

}  // namespace nlcox
