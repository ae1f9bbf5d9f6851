#include "neurobetti/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

#include "neurobetti/errors.hpp"

namespace neurobetti {

Graph::Graph(int n) {
  if (n < 0 || n > 32) throw InputError("graph size " + std::to_string(n) + " outside 0..32");
  adj_.assign(n, 0);
}

void Graph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n() || j >= n()) throw InputError("edge endpoint out of range");
  if (i == j) throw InputError("self-loop at vertex " + std::to_string(i + 1));
  adj_[i] |= neuron_bit(j);
  adj_[j] |= neuron_bit(i);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n(); ++i) {
    for (int j = i + 1; j < n(); ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Graph::is_clique(NeuronSet vertices) const {
  for (NeuronSet rest = vertices; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (!is_subset(vertices & ~neuron_bit(v), adj_[v])) return false;
  }
  return true;
}

Graph relationship_graph(const SquarefreeIdeal& ideal) {
  Graph g(ideal.n());
  std::vector<NeuronSet> forbidden(ideal.n(), 0);
  for (const auto& m : ideal.gens()) {
    if (m.degree() != 2) {
      throw InputError("relationship graph needs a degree-two canonical form; found " + to_string(m));
    }
    // x_i x_j, x_i y_j and x_j y_i all forbid the pair; y_i y_j does not arise for neural ideals.
    if (m.x_degree() == 0) continue;
    const NeuronSet both = m.x | m.y;
    const int i = std::countr_zero(both);
    const int j = 31 - std::countl_zero(both);
    forbidden[i] |= neuron_bit(j);
    forbidden[j] |= neuron_bit(i);
  }
  for (int i = 0; i < ideal.n(); ++i) {
    for (int j = i + 1; j < ideal.n(); ++j) {
      if (!(forbidden[i] & neuron_bit(j))) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

/// Shortest path from a to b using only `allowed` vertices (BFS); empty if none.
std::vector<int> shortest_path(const Graph& g, int a, int b, NeuronSet allowed) {
  std::vector<int> parent(g.n(), -1);
  std::queue<int> frontier;
  frontier.push(a);
  NeuronSet seen = neuron_bit(a);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    if (v == b) break;
    for (NeuronSet next = g.neighbors(v) & allowed & ~seen; next; next &= next - 1) {
      const int w = std::countr_zero(next);
      seen |= neuron_bit(w);
      parent[w] = v;
      frontier.push(w);
    }
  }
  if (!(seen & neuron_bit(b))) return {};
  std::vector<int> path;
  for (int v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ChordalityResult chordality(const Graph& g) {
  const int n = g.n();
  // Maximum-cardinality search; the reverse of the visit order is the candidate elimination order.
  std::vector<int> weight(n, 0);
  NeuronSet unvisited = first_neurons(n);
  std::vector<int> visit;
  visit.reserve(n);
  while (unvisited) {
    int best = -1;
    for (NeuronSet rest = unvisited; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (best < 0 || weight[v] > weight[best]) best = v;
    }
    visit.push_back(best);
    unvisited &= ~neuron_bit(best);
    for (NeuronSet rest = g.neighbors(best) & unvisited; rest; rest &= rest - 1) ++weight[std::countr_zero(rest)];
  }
  std::vector<int> order(visit.rbegin(), visit.rend());

  ChordalityResult result;
  NeuronSet remaining = first_neurons(n);
  EliminationOrdering elim;
  for (int v : order) {
    const NeuronSet nbrs = g.neighbors(v) & remaining & ~neuron_bit(v);
    if (!g.is_clique(nbrs)) {
      // Two non-adjacent neighbours a, b of v: a shortest a-b path avoiding v's other neighbours
      // closes a chordless cycle through v.
      for (NeuronSet ra = nbrs; ra && result.chordless_cycle.empty(); ra &= ra - 1) {
        const int a = std::countr_zero(ra);
        for (NeuronSet rb = nbrs & ~g.neighbors(a) & ~neuron_bit(a) & ~((neuron_bit(a) << 1) - 1); rb; rb &= rb - 1) {
          const int b = std::countr_zero(rb);
          const NeuronSet allowed = (remaining & ~neuron_bit(v) & ~nbrs) | neuron_bit(a) | neuron_bit(b);
          auto path = shortest_path(g, a, b, allowed);
          if (!path.empty()) {
            result.chordless_cycle.push_back(v);
            result.chordless_cycle.insert(result.chordless_cycle.end(), path.begin(), path.end());
            break;
          }
        }
      }
      return result;
    }
    elim.order.push_back(v);
    elim.degrees.push_back(set_size(nbrs));
    remaining &= ~neuron_bit(v);
  }
  result.ordering = std::move(elim);
  return result;
}

std::vector<int> simplicial_degree_profile(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n()) throw InputError("ordering length differs from vertex count");
  NeuronSet remaining = first_neurons(g.n());
  std::vector<int> degrees;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const int v = order[step];
    if (v < 0 || v >= g.n() || !(remaining & neuron_bit(v))) {
      throw InputError("ordering is not a permutation at step " + std::to_string(step + 1));
    }
    const NeuronSet nbrs = g.neighbors(v) & remaining;
    if (!g.is_clique(nbrs)) {
      throw InputError("vertex " + std::to_string(v + 1) + " is not simplicial at step " + std::to_string(step + 1));
    }
    degrees.push_back(set_size(nbrs));
    remaining &= ~neuron_bit(v);
  }
  return degrees;
}

void for_each_elimination_ordering(const Graph& g, const std::function<bool(const EliminationOrdering&)>& visit) {
  if (g.n() > kMaxEnumerationVertices) {
    throw InputError("enumerating elimination orderings is limited to " + std::to_string(kMaxEnumerationVertices) +
                     " vertices");
  }
  EliminationOrdering current;
  bool stop = false;
  std::function<void(NeuronSet)> recurse = [&](NeuronSet remaining) {
    if (remaining == 0) {
      stop = !visit(current);
      return;
    }
    for (NeuronSet rest = remaining; rest && !stop; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const NeuronSet nbrs = g.neighbors(v) & remaining;
      if (!g.is_clique(nbrs)) continue;
      current.order.push_back(v);
      current.degrees.push_back(set_size(nbrs));
      recurse(remaining & ~neuron_bit(v));
      current.order.pop_back();
      current.degrees.pop_back();
    }
  };
  recurse(first_neurons(g.n()));
}

std::vector<EliminationOrdering> all_elimination_orderings(const Graph& g) {
  std::vector<EliminationOrdering> out;
  for_each_elimination_ordering(g, [&out](const EliminationOrdering& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::vector<int> degree_multiset(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::string render_edges(const Graph& g) {
  std::string out;
  for (auto [i, j] : g.edges()) out += std::to_string(i + 1) + "-" + std::to_string(j + 1) + "\n";
  return out;
}

std::string render_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (int i = 0; i < g.n(); ++i) out += "  " + std::to_string(i + 1) + ";\n";
  for (auto [i, j] : g.edges()) out += "  " + std::to_string(i + 1) + " -- " + std::to_string(j + 1) + ";\n";
  out += "}\n";
  return out;
}

Graph parse_graph(const std::string& text) {
  int declared = -1;
  int seen_max = 0;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line;
    for (char c : raw) line += (c == '-' || c == '\t' || c == '\r') ? ' ' : c;
    const auto first = line.find_first_not_of(' ');
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.compare(first, 2, "n=") == 0) {
      declared = std::stoi(line.substr(first + 2));
      if (declared < 0 || declared > 32) throw InputError("graph header n out of range");
      continue;
    }
    std::istringstream tokens(line);
    int a = 0;
    int b = 0;
    std::string extra;
    if (!(tokens >> a >> b) || (tokens >> extra) || a <= 0 || b <= 0) {
      throw InputError("line " + std::to_string(line_no) + ": expected an edge 'i-j'");
    }
    seen_max = std::max({seen_max, a, b});
    edges.emplace_back(a - 1, b - 1);
  }
  const int n = declared >= 0 ? declared : seen_max;
  if (seen_max > n) throw InputError("edge endpoint exceeds declared n");
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

}  // namespace neurobetti
