#include "nlcox/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "nlcox/georep.hpp"

namespace nlcox::metric {

namespace {
constexpr int kUnreached = std::numeric_limits<int>::max() / 4;
}

FiniteMetricGraph FiniteMetricGraph::from_edges(
    int node_count, const std::vector<std::array<int, 3>>& edges,
    std::vector<std::string> node_labels) {
  if (node_count <= 0) throw GraphError("metric graph needs at least one node");
  FiniteMetricGraph m;
  if (node_labels.empty()) {
    for (int i = 0; i < node_count; ++i) m.labels_.push_back("n" + std::to_string(i));
  } else {
    if (static_cast<int>(node_labels.size()) != node_count)
      throw GraphError("node label count does not match node count");
    m.labels_ = std::move(node_labels);
  }
  m.adjacency_.resize(static_cast<std::size_t>(node_count));
  for (const auto& [u, v, gen] : edges) {
    (void)gen;
    m.check_node(u);
    m.check_node(v);
    if (u == v) throw GraphError("self-loop in metric graph");
  }
  m.edges_ = edges;
  std::sort(m.edges_.begin(), m.edges_.end());
  m.edges_.erase(std::unique(m.edges_.begin(), m.edges_.end()), m.edges_.end());
  for (const auto& [u, v, gen] : m.edges_) {
    (void)gen;
    m.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    m.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : m.adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  m.build_distances();
  m.check_metric_axioms();
  return m;
}

void FiniteMetricGraph::build_distances() {
  const int n = node_count();
  dist_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreached);
  for (int src = 0; src < n; ++src) {
    auto row = dist_.begin() + static_cast<std::ptrdiff_t>(src) * n;
    std::deque<int> queue{src};
    row[src] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adjacency_[static_cast<std::size_t>(u)]) {
        if (row[v] == kUnreached) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
}

void FiniteMetricGraph::check_metric_axioms() const {
  const int n = node_count();
  for (int a = 0; a < n; ++a) {
    if (distance(a, a) != 0) throw GraphError("metric axiom violated: d(a,a) != 0");
    for (int b = 0; b < n; ++b) {
      if (distance(a, b) >= kUnreached)
        throw GraphError("metric graph is disconnected");
      if (distance(a, b) != distance(b, a))
        throw GraphError("metric axiom violated: asymmetry");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (distance(a, c) > distance(a, b) + distance(b, c))
          throw GraphError("metric axiom violated: triangle inequality");
}

int FiniteMetricGraph::distance(int a, int b) const {
  check_node(a);
  check_node(b);
  return dist_[static_cast<std::size_t>(a) * static_cast<std::size_t>(node_count()) +
               static_cast<std::size_t>(b)];
}

int FiniteMetricGraph::degree(int v) const {
  check_node(v);
  return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
}

void FiniteMetricGraph::check_node(int v) const {
  if (v < 0 || v >= node_count())
    throw std::invalid_argument("unknown node id " + std::to_string(v));
}

std::vector<int> FiniteMetricGraph::geodesic_points(int u, int v) const {
  std::vector<int> out;
  const int d = distance(u, v);
  for (int w = 0; w < node_count(); ++w)
    if (distance(u, w) + distance(w, v) == d) out.push_back(w);
  return out;
}

bool FiniteMetricGraph::enumerate_geodesics(int u, int v, int cap,
                                            std::vector<std::vector<int>>& out) const {
  out.clear();
  std::vector<int> path{u};
  bool complete = true;
  auto dfs = [&](auto&& self, int cur) -> bool {  // false = stop early
    if (cur == v) {
      out.push_back(path);
      return static_cast<int>(out.size()) < cap;
    }
    for (int w : adjacency_[static_cast<std::size_t>(cur)]) {
      if (distance(w, v) != distance(cur, v) - 1) continue;
      path.push_back(w);
      const bool keep_going = self(self, w);
      path.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  complete = dfs(dfs, u);
  return complete;
}

struct CayleyBuilder {
  const CoxeterGraph& graph;
  std::vector<Eigen::MatrixXd> generators;
  std::vector<Eigen::MatrixXd> elements;
  std::vector<int> depth;
  std::vector<std::string> words;
  std::vector<std::array<int, 3>> edges;

  explicit CayleyBuilder(const CoxeterGraph& g) : graph(g) {
    for (int i = 0; i < g.size(); ++i)
      generators.push_back(georep::simple_reflection(g, i));
    const auto n = static_cast<Eigen::Index>(g.size());
    elements.push_back(Eigen::MatrixXd::Identity(n, n));
    depth.push_back(0);
    words.push_back("e");
  }

  // Index of the element equal to M, or -1. Every comparison distance inside
  // the forbidden band aborts; this is a runtime invariant, not an assumption.
  int lookup(const Eigen::MatrixXd& M) const {
    int found = -1;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const double d = (M - elements[k]).cwiseAbs().maxCoeff();
      if (d < kSameElementTol) {
        found = static_cast<int>(k);
      } else if (d <= kDistinctElementTol) {
        throw NumericError(
            "element deduplication hit the ambiguity band: matrix distance " +
            std::to_string(d));
      }
    }
    return found;
  }

  // max_depth < 0 means run to closure; max_elements guards that case.
  // Elements at the depth cutoff are not expanded, but their products are
  // still looked up so that a ball containing the whole group is detected.
  FiniteMetricGraph run(int max_depth, int max_elements) {
    std::size_t next = 0;
    bool closed = true;
    while (next < elements.size()) {
      const std::size_t u = next++;
      const bool at_cutoff = max_depth >= 0 && depth[u] >= max_depth;
      for (int i = 0; i < graph.size(); ++i) {
        const Eigen::MatrixXd M = elements[u] * generators[static_cast<std::size_t>(i)];
        int v = lookup(M);
        if (v < 0) {
          if (at_cutoff) {
            closed = false;
            continue;
          }
          elements.push_back(M);
          depth.push_back(depth[u] + 1);
          words.push_back(words[u] == "e" ? graph.name(i)
                                          : words[u] + " " + graph.name(i));
          v = static_cast<int>(elements.size()) - 1;
          if (static_cast<int>(elements.size()) > max_elements)
            throw CapacityError("group enumeration exceeded " +
                                std::to_string(max_elements) + " elements");
        }
        const int a = std::min(static_cast<int>(u), v);
        const int b = std::max(static_cast<int>(u), v);
        edges.push_back({a, b, i});
      }
    }
    auto m = FiniteMetricGraph::from_edges(static_cast<int>(elements.size()), edges,
                                           words);
    m.covers_full_group_ = closed;
    return m;
  }
};

FiniteMetricGraph cayley_ball(const CoxeterGraph& g, int radius) {
  if (radius < 0) throw GraphError("radius must be non-negative");
  if (radius > kMaxBallRadius)
    throw CapacityError("cayley_ball supports radius <= " +
                        std::to_string(kMaxBallRadius) + ", got " +
                        std::to_string(radius));
  if (g.size() > kMaxBallGenerators)
    throw CapacityError("cayley_ball supports at most " +
                        std::to_string(kMaxBallGenerators) + " generators, got " +
                        std::to_string(g.size()));
  CayleyBuilder builder(g);
  // Loose element guard: the ball of radius r has at most n(n-1)^(r-1)+...
  // elements, but the dedup scan is quadratic, so keep a flat cap.
  return builder.run(radius, 100000);
}

FiniteMetricGraph full_cayley_graph(const CoxeterGraph& g, int max_elements) {
  if (g.size() > kMaxBallGenerators)
    throw CapacityError("full_cayley_graph supports at most " +
                        std::to_string(kMaxBallGenerators) + " generators, got " +
                        std::to_string(g.size()));
  CayleyBuilder builder(g);
  auto m = builder.run(-1, max_elements);
  return m;
}

Rational gromov_product(const FiniteMetricGraph& m, int x, int y, int z) {
  return Rational(m.distance(x, z) + m.distance(y, z) - m.distance(x, y), 2);
}

namespace {

int min_distance_to(const FiniteMetricGraph& m, int p, const std::vector<int>& set) {
  int best = std::numeric_limits<int>::max();
  for (int u : set) best = std::min(best, m.distance(p, u));
  return best;
}

}  // namespace

double delta_estimate(const FiniteMetricGraph& m, DeltaMode mode, int sample_cap) {
  const int n = m.node_count();
  const bool exhaustive = mode == DeltaMode::Exhaustive;
  if (exhaustive && n > kMaxExhaustiveNodes)
    throw CapacityError("exhaustive delta estimation supports at most " +
                        std::to_string(kMaxExhaustiveNodes) + " nodes, got " +
                        std::to_string(n));
  const int cap = exhaustive ? kGeodesicCap : std::max(1, sample_cap);

  auto geodesics = [&](int u, int v) {
    std::vector<std::vector<int>> out;
    const bool complete = m.enumerate_geodesics(u, v, cap, out);
    if (exhaustive && !complete)
      throw CapacityError("more than " + std::to_string(cap) +
                          " geodesics between a node pair; use sampled mode");
    return out;
  };

  int delta = 0;

  // Degenerate triangles (two corners equal): every geodesic g' between a
  // pair must lie in the delta-neighborhood of every other geodesic g.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const auto points = m.geodesic_points(u, v);
      for (const auto& g : geodesics(u, v)) {
        for (int p : points) delta = std::max(delta, min_distance_to(m, p, g));
      }
    }
  }

  // Proper triangles: for each corner as apex, the union of the two legs
  // must cover the opposite side. The opposite side ranges over all its
  // geodesics, so its point set is exactly geodesic_points of the pair.
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        const std::array<std::array<int, 3>, 3> configs = {
            {{x, y, z}, {y, x, z}, {z, x, y}}};  // (apex, end1, end2)
        for (const auto& [apex, e1, e2] : configs) {
          const auto base_points = m.geodesic_points(e1, e2);
          const auto legs1 = geodesics(e1, apex);
          const auto legs2 = geodesics(apex, e2);
          for (const auto& g1 : legs1) {
            for (const auto& g2 : legs2) {
              std::vector<int> side_union = g1;
              side_union.insert(side_union.end(), g2.begin(), g2.end());
              for (int p : base_points)
                delta = std::max(delta, min_distance_to(m, p, side_union));
            }
          }
        }
      }
    }
  }
  return static_cast<double>(delta);
}

bool qi_embedding_check(const std::vector<std::pair<long long, int>>& points,
                        const FiniteMetricGraph& m, double C) {
  if (C < 1.0) throw std::invalid_argument("quasi-isometry constant must be >= 1");
  for (const auto& [index, node] : points) {
    (void)index;
    if (node < 0 || node >= m.node_count())
      throw std::invalid_argument("unknown node id " + std::to_string(node));
  }
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const double gap = std::abs(static_cast<double>(points[a].first - points[b].first));
      const double d = m.distance(points[a].second, points[b].second);
      if (d < -C + gap / C) return false;
      if (d > C * gap + C) return false;
    }
  }
  return true;
}

std::string to_dot(const FiniteMetricGraph& m,
                   const std::vector<std::string>& generator_names) {
  std::ostringstream out;
  out << "// nodes: " << m.node_count() << "\n";
  out << "// edges: " << m.edges().size() << "\n";
  out << "// closed: " << (m.covers_full_group() ? "true" : "false") << "\n";
  out << "graph cayley {\n";
  for (int i = 0; i < m.node_count(); ++i)
    out << "  n" << i << " [label=\"" << m.node_labels()[static_cast<std::size_t>(i)]
        << "\"];\n";
  for (const auto& [u, v, gen] : m.edges()) {
    out << "  n" << u << " -- n" << v;
    if (gen >= 0 && gen < static_cast<int>(generator_names.size()))
      out << " [label=\"" << generator_names[static_cast<std::size_t>(gen)] << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace nlcox::metric
