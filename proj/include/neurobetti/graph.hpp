#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neurobetti/code.hpp"
#include "neurobetti/polarize.hpp"

namespace neurobetti {

/// Simple undirected graph on vertices 0..n-1 (n <= 32), adjacency as bit masks.
class Graph {
 public:
  explicit Graph(int n = 0);

  int n() const { return static_cast<int>(adj_.size()); }
  void add_edge(int i, int j);
  bool has_edge(int i, int j) const { return (adj_[i] >> j) & 1U; }
  NeuronSet neighbors(int i) const { return adj_[i]; }
  /// Sorted (i, j) pairs with i < j.
  std::vector<std::pair<int, int>> edges() const;
  bool is_clique(NeuronSet vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<NeuronSet> adj_;
};

/// Removal order together with each vertex's degree in the residual graph when removed.
struct EliminationOrdering {
  std::vector<int> order;
  std::vector<int> degrees;
};

/// Vertices 0..n-1, edge {i,j} iff none of x_i x_j, x_i y_j, x_j y_i is a generator.
/// Throws InputError if any generator is not of degree two.
Graph relationship_graph(const SquarefreeIdeal& ideal);

struct ChordalityResult {
  std::optional<EliminationOrdering> ordering;  // present iff chordal
  /// A chordless cycle (length >= 4) when one was found cheaply; vertices in cycle order.
  std::vector<int> chordless_cycle;

  bool chordal() const { return ordering.has_value(); }
};

/// Maximum-cardinality search followed by an explicit simplicial check of the candidate ordering.
ChordalityResult chordality(const Graph& g);

/// Residual degree of each removed vertex. Throws InputError naming the first step whose vertex is
/// not simplicial, or if `order` is not a permutation.
std::vector<int> simplicial_degree_profile(const Graph& g, const std::vector<int>& order);

inline constexpr int kMaxEnumerationVertices = 9;

/// Calls visit for every simplicial elimination ordering (backtracking over simplicial vertices).
/// visit returns false to stop early. Throws InputError when n exceeds kMaxEnumerationVertices.
void for_each_elimination_ordering(const Graph& g, const std::function<bool(const EliminationOrdering&)>& visit);

std::vector<EliminationOrdering> all_elimination_orderings(const Graph& g);

/// Degrees sorted ascending.
std::vector<int> degree_multiset(std::vector<int> degrees);

/// "i-j" per line, 1-based.
std::string render_edges(const Graph& g);
std::string render_dot(const Graph& g);
/// Optional "n=<int>" header, then one edge per line as "i-j" or "i j" (1-based).
Graph parse_graph(const std::string& text);

}  // namespace neurobetti
