#include "nlcox/triangle.hpp"

#include <algorithm>
#include <limits>

namespace nlcox {

const char* triangle_geometry_name(TriangleGeometry g) {
  switch (g) {
    case TriangleGeometry::Spherical: return "SPHERICAL";
    case TriangleGeometry::Euclidean: return "EUCLIDEAN";
    case TriangleGeometry::Hyperbolic: return "HYPERBOLIC";
  }
  return "?";
}

std::string TriangleClass::angle_sum_str() const {
  return std::to_string(angle_sum_num) + "/" + std::to_string(angle_sum_den);
}

TriangleClass classify_triangle(int l, int m, int n) {
  if (l < 2 || m < 2 || n < 2)
    throw GraphError("triangle labels must be >= 2, got (" + std::to_string(l) + ", " +
                     std::to_string(m) + ", " + std::to_string(n) + ")");
  TriangleClass tc;
  tc.l = l;
  tc.m = m;
  tc.n = n;
  if (tc.l > tc.m) std::swap(tc.l, tc.m);
  if (tc.m > tc.n) std::swap(tc.m, tc.n);
  if (tc.l > tc.m) std::swap(tc.l, tc.m);

  const __int128 L = tc.l, M = tc.m, N = tc.n;
  __int128 num = M * N + L * N + L * M;  // (1/l + 1/m + 1/n) * lmn
  __int128 den = L * M * N;
  if (num > den)
    tc.geometry = TriangleGeometry::Spherical;
  else if (num == den)
    tc.geometry = TriangleGeometry::Euclidean;
  else
    tc.geometry = TriangleGeometry::Hyperbolic;

  __int128 a = num, b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  num /= a;
  den /= a;
  if (num > std::numeric_limits<long long>::max() ||
      den > std::numeric_limits<long long>::max())
    throw CapacityError("triangle labels too large for the exact angle-sum field");
  tc.angle_sum_num = static_cast<long long>(num);
  tc.angle_sum_den = static_cast<long long>(den);
  return tc;
}

}  // namespace nlcox
