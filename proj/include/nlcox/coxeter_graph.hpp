#pragma once

#include <Eigen/Core>

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlcox/errors.hpp"

namespace nlcox {

// Entry value marking an absent edge: the pair of generators satisfies no
// relation and their product has infinite order. There is no explicit
// infinity token in input files; omitting the edge is the only spelling.
inline constexpr int kInfiniteLabel = 0;

// Largest accepted finite edge label.
inline constexpr int kMaxLabel = 2147483647;

// A Coxeter defining graph: named vertices (one per involutive generator)
// and a symmetric partial map from vertex pairs to finite orders m >= 2.
// A missing pair means the free relation (infinite order product).
//
// Vertex order is the order of the input file and fixes generator indices
// in every downstream matrix, word, and witness.
class CoxeterGraph {
 public:
  explicit CoxeterGraph(std::vector<std::string> vertex_names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(std::string_view name) const;

  // Finite label of the pair, or kInfiniteLabel when the edge is absent.
  int label(int i, int j) const;
  bool has_edge(int i, int j) const { return label(i, j) >= 2; }

  // m >= 2 on a valid off-diagonal pair; re-setting the same value is a no-op,
  // a conflicting value is an error.
  void set_label(int i, int j, int m);

  // Symmetric integer matrix with 1 on the diagonal and kInfiniteLabel for
  // absent pairs.
  const Eigen::MatrixXi& coxeter_matrix() const { return matrix_; }

  // Present edges as (i, j, m) with i < j, ordered lexicographically.
  std::vector<std::array<int, 3>> edges() const;

 private:
  void check_index(int i) const;

  std::vector<std::string> names_;
  Eigen::MatrixXi matrix_;
};

enum class GraphFormat { Text, Json };

CoxeterGraph parse_graph(std::istream& in, GraphFormat format);
CoxeterGraph parse_graph(const std::string& text, GraphFormat format);

// Reads a graph file; format defaults to Text unless the filename ends in
// ".json". Throws UsageError when the file cannot be opened.
CoxeterGraph load_graph_file(const std::string& path,
                             std::optional<GraphFormat> format = std::nullopt);

std::string serialize_graph(const CoxeterGraph& g, GraphFormat format);

// True iff every unordered vertex pair carries a finite label.
bool is_complete(const CoxeterGraph& g);

// True iff every present label equals 2.
bool is_right_angled(const CoxeterGraph& g);

// Partition of vertex indices by reachability over present (finite) edges.
// Parts are sorted internally and ordered by smallest member.
std::vector<std::vector<int>> connected_components(const CoxeterGraph& g);

// Partition by reachability over edges with odd finite label. The number of
// parts is the Z/2-rank of the abelianization of the Coxeter group.
std::vector<std::vector<int>> odd_components(const CoxeterGraph& g);

// A word in the generators; letters are vertex indices of the ambient graph.
// Generators are involutions, so no inverse marks are needed.
using Word = std::vector<int>;

// Splits on whitespace/commas and resolves each token as a vertex name; a
// token in which every character is itself a single-character vertex name is
// split letterwise, so "abc" works for a graph with vertices a, b, c.
Word parse_word(const CoxeterGraph& g, std::string_view text);

void check_word(const CoxeterGraph& g, const Word& w);

std::string word_to_string(const CoxeterGraph& g, const Word& w);

}  // namespace nlcox
