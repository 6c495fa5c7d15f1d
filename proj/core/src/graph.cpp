#include "rpp/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "rpp/errors.hpp"
#include "rpp/rng.hpp"

namespace rpp {

DirectedGraph::DirectedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), in_(static_cast<std::size_t>(std::max(n, 0))),
      out_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 1) throw InvalidParameterError("DirectedGraph: node count must be >= 1");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [from, to] : edges) {
    if (from < 0 || from >= n || to < 0 || to >= n)
      throw InvalidParameterError("DirectedGraph: edge endpoint out of range");
    out_[from].push_back(to);
    in_[to].push_back(from);
  }
  for (int i = 0; i < n; ++i) {
    std::sort(in_[i].begin(), in_[i].end());
    std::sort(out_[i].begin(), out_[i].end());
    if (!std::binary_search(in_[i].begin(), in_[i].end(), i))
      throw InvalidParameterError("DirectedGraph: node " + std::to_string(i) +
                                  " is missing its self-loop");
  }
}

bool DirectedGraph::has_edge(int from, int to) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) return false;
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

const std::vector<int>& DirectedGraph::in_neighbors(int i) const {
  if (i < 0 || i >= n_) throw InvalidParameterError("in_neighbors: node out of range");
  return in_[i];
}

const std::vector<int>& DirectedGraph::out_neighbors(int i) const {
  if (i < 0 || i >= n_) throw InvalidParameterError("out_neighbors: node out of range");
  return out_[i];
}

int DirectedGraph::in_degree(int i) const {
  return static_cast<int>(in_neighbors(i).size()) - 1;
}

int DirectedGraph::out_degree(int i) const {
  return static_cast<int>(out_neighbors(i).size()) - 1;
}

std::vector<std::pair<int, int>> DirectedGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int from = 0; from < n_; ++from)
    for (int to : out_[from]) e.emplace_back(from, to);
  std::sort(e.begin(), e.end());
  return e;
}

std::size_t DirectedGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& adj : out_) c += adj.size();
  return c;
}

DirectedGraph DirectedGraph::transposed() const {
  std::vector<std::pair<int, int>> e;
  for (int from = 0; from < n_; ++from)
    for (int to : out_[from]) e.emplace_back(to, from);
  return DirectedGraph(n_, std::move(e));
}

std::string DirectedGraph::to_edge_list() const {
  std::ostringstream os;
  os << "n " << n_ << "\n";
  for (const auto& [from, to] : edges()) os << from << " " << to << "\n";
  return os.str();
}

DirectedGraph DirectedGraph::from_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  int n = 0;
  if (!(is >> tag >> n) || tag != "n")
    throw InvalidParameterError("edge list: expected header 'n <count>'");
  std::vector<std::pair<int, int>> edges;
  int from = 0, to = 0;
  while (is >> from >> to) edges.emplace_back(from, to);
  if (!is.eof())
    throw InvalidParameterError("edge list: malformed edge line");
  return DirectedGraph(n, std::move(edges));
}

DirectedGraph generate_ring_plus_random(int n, double p_add, std::uint64_t seed,
                                        const RingGraphOptions& opts) {
  if (n < 2) throw InvalidParameterError("generate_ring_plus_random: n must be >= 2");
  if (!(p_add >= 0.0 && p_add <= 1.0))
    throw InvalidParameterError("generate_ring_plus_random: p_add must lie in [0,1]");

  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<char>> present(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
  auto add = [&](int from, int to) {
    if (!present[from][to]) {
      present[from][to] = 1;
      edges.emplace_back(from, to);
    }
  };
  for (int i = 0; i < n; ++i) {
    add(i, i);
    add(i, (i + 1) % n);
    if (opts.bidirectional) add((i + 1) % n, i);
  }

  // Remaining ordered pairs sampled in fixed row-major order for determinism.
  std::mt19937_64 rng = make_engine(seed);
  std::bernoulli_distribution coin(p_add);
  for (int from = 0; from < n; ++from)
    for (int to = 0; to < n; ++to) {
      if (from == to || present[from][to]) continue;
      if (p_add > 0.0 && coin(rng)) add(from, to);
    }
  return DirectedGraph(n, std::move(edges));
}

namespace {

// Iterative Tarjan; returns component id per node, ids in reverse
// topological order of the condensation.
std::vector<int> strongly_connected_components(const DirectedGraph& g, int& comp_count) {
  const int n = g.size();
  std::vector<int> index(n, -1), lowlink(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0;
  comp_count = 0;

  struct Frame {
    int node;
    std::size_t child;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> call_stack{{start, 0}};
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!call_stack.empty()) {
      Frame& fr = call_stack.back();
      const auto& succ = g.out_neighbors(fr.node);
      if (fr.child < succ.size()) {
        int w = succ[fr.child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[fr.node] = std::min(lowlink[fr.node], index[w]);
        }
      } else {
        if (lowlink[fr.node] == index[fr.node]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
          } while (w != fr.node);
          ++comp_count;
        }
        int v = fr.node;
        call_stack.pop_back();
        if (!call_stack.empty())
          lowlink[call_stack.back().node] = std::min(lowlink[call_stack.back().node], lowlink[v]);
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<int> spanning_tree_roots(const DirectedGraph& g) {
  int comp_count = 0;
  std::vector<int> comp = strongly_connected_components(g, comp_count);

  // A root set is nonempty iff the condensation has a unique source component;
  // in a DAG every node is reachable from some source, so a unique source
  // reaches everything. Its members are exactly the roots.
  std::vector<char> has_incoming(static_cast<std::size_t>(comp_count), 0);
  for (int from = 0; from < g.size(); ++from)
    for (int to : g.out_neighbors(from))
      if (comp[from] != comp[to]) has_incoming[comp[to]] = 1;

  int source = -1;
  int sources = 0;
  for (int c = 0; c < comp_count; ++c)
    if (!has_incoming[c]) {
      ++sources;
      source = c;
    }
  std::vector<int> roots;
  if (sources == 1)
    for (int i = 0; i < g.size(); ++i)
      if (comp[i] == source) roots.push_back(i);
  return roots;
}

Assumption3Report assumption3_holds(const DirectedGraph& gR, const DirectedGraph& gC) {
  if (gR.size() != gC.size())
    throw InvalidParameterError("assumption3_holds: graphs must have equal node counts");
  Assumption3Report rep;
  rep.roots_r = spanning_tree_roots(gR);
  rep.roots_c_transpose = spanning_tree_roots(gC.transposed());
  std::vector<int> common;
  std::set_intersection(rep.roots_r.begin(), rep.roots_r.end(),
                        rep.roots_c_transpose.begin(), rep.roots_c_transpose.end(),
                        std::back_inserter(common));
  rep.holds = !common.empty();
  if (rep.holds) {
    rep.common_root = common.front();
    rep.message = "common spanning-tree root: node " + std::to_string(common.front());
  } else {
    rep.message = "no node is a spanning-tree root of both G_R and G_C^T";
  }
  return rep;
}

}  // namespace rpp
