#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "nlcox/coxeter_graph.hpp"
#include "nlcox/rational.hpp"

// Desk-scale metric toolkit: finite pieces of Cayley graphs with exact
// shortest-path metrics, Gromov products, thin-triangle constants, and
// quasi-isometric-embedding checks.
namespace nlcox::metric {

inline constexpr int kMaxBallRadius = 12;
inline constexpr int kMaxBallGenerators = 4;
inline constexpr int kMaxExhaustiveNodes = 200;
inline constexpr int kGeodesicCap = 100000;  // per node pair, exhaustive mode

// Matrices closer than the lower bound are the same group element, farther
// than the upper bound are distinct; a comparison landing in between aborts
// with a NumericError rather than guessing.
inline constexpr double kSameElementTol = 1e-9;
inline constexpr double kDistinctElementTol = 1e-3;

// Undirected finite graph with the shortest-path metric. The distance table
// is computed on construction and the metric axioms are asserted then.
class FiniteMetricGraph {
 public:
  // Edges are (u, v, generator); pass generator -1 for unlabeled graphs.
  static FiniteMetricGraph from_edges(
      int node_count, const std::vector<std::array<int, 3>>& edges,
      std::vector<std::string> node_labels = {});

  int node_count() const { return static_cast<int>(labels_.size()); }
  int distance(int a, int b) const;
  const std::vector<std::string>& node_labels() const { return labels_; }
  const std::vector<std::array<int, 3>>& edges() const { return edges_; }
  int degree(int v) const;

  // True when this graph is the whole Cayley graph of a finite group rather
  // than a proper ball.
  bool covers_full_group() const { return covers_full_group_; }

  // Nodes on some geodesic from u to v, i.e. w with d(u,w)+(w,v) = d(u,v).
  std::vector<int> geodesic_points(int u, int v) const;

  // All geodesics u -> v as node sequences, stopping after `cap` paths;
  // returns false when the cap was hit.
  bool enumerate_geodesics(int u, int v, int cap,
                           std::vector<std::vector<int>>& out) const;

 private:
  friend struct CayleyBuilder;
  void build_distances();
  void check_metric_axioms() const;
  void check_node(int v) const;

  std::vector<std::string> labels_;
  std::vector<std::array<int, 3>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> dist_;  // row-major node_count x node_count
  bool covers_full_group_ = false;
};

// Ball of the given radius around the identity in the Cayley graph, built by
// breadth-first search over geometric-representation matrices with banded
// deduplication. Nodes are labeled by their shortest (lexicographically
// first) words; edges join elements differing by one generator.
FiniteMetricGraph cayley_ball(const CoxeterGraph& g, int radius);

// Breadth-first closure of the whole group, for finite groups; throws
// CapacityError when more than max_elements elements appear (in particular
// for infinite groups).
FiniteMetricGraph full_cayley_graph(const CoxeterGraph& g, int max_elements = 2000);

// (d(x,z) + d(y,z) - d(x,y)) / 2, exact.
Rational gromov_product(const FiniteMetricGraph& m, int x, int y, int z);

enum class DeltaMode { Exhaustive, Sampled };

// Smallest delta such that every side of every geodesic triangle lies in the
// delta-neighborhood of the two other sides, over all triples and all
// geodesic choices. Exhaustive mode enumerates every geodesic (capacity
// errors beyond kMaxExhaustiveNodes nodes or kGeodesicCap geodesics per
// pair); sampled mode enumerates at most `sample_cap` geodesics per pair and
// reports a lower bound.
double delta_estimate(const FiniteMetricGraph& m, DeltaMode mode, int sample_cap = 0);

// Quasi-isometric-embedding inequality with constant C for an indexed point
// sequence: -C + |i-j|/C <= d(image_i, image_j) <= C|i-j| + C for all pairs.
bool qi_embedding_check(const std::vector<std::pair<long long, int>>& points,
                        const FiniteMetricGraph& m, double C);

// Graphviz rendering with node-count header comments.
std::string to_dot(const FiniteMetricGraph& m,
                   const std::vector<std::string>& generator_names = {});

}  // namespace nlcox::metric
