#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rpp {

/// Directed communication graph. An edge (j, i) means "i can receive from j".
/// Every node carries an explicit self-loop; construction rejects graphs
/// without them so the mixing-matrix builders never special-case diagonals.
/// Immutable after construction and safe to share across threads.
class DirectedGraph {
public:
  /// \p edges are (from, to) pairs; self-loops must be included.
  DirectedGraph(int n, std::vector<std::pair<int, int>> edges);

  int size() const noexcept { return n_; }
  bool has_edge(int from, int to) const;

  /// Sorted, includes the node itself (self-loop).
  const std::vector<int>& in_neighbors(int i) const;
  const std::vector<int>& out_neighbors(int i) const;

  /// Number of in-neighbors excluding the self-loop.
  int in_degree(int i) const;
  /// Number of out-neighbors excluding the self-loop.
  int out_degree(int i) const;

  /// All edges, sorted lexicographically, self-loops included.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  DirectedGraph transposed() const;

  /// Text round-trip: header "n <count>", then one "from to" pair per line.
  std::string to_edge_list() const;
  static DirectedGraph from_edge_list(const std::string& text);

private:
  int n_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
};

struct RingGraphOptions {
  /// When true the base ring is the union of both cycle orientations.
  bool bidirectional = false;
};

/// Directed ring i -> (i+1 mod n) plus self-loops, plus each remaining ordered
/// non-adjacent pair included independently with probability p_add.
/// Deterministic for a fixed seed.
DirectedGraph generate_ring_plus_random(int n, double p_add, std::uint64_t seed,
                                        const RingGraphOptions& opts = {});

/// Nodes from which every node of g is reachable along directed edges
/// (roots of spanning trees of g). Sorted; empty when no such node exists.
std::vector<int> spanning_tree_roots(const DirectedGraph& g);

struct Assumption3Report {
  bool holds = false;
  std::optional<int> common_root;
  std::vector<int> roots_r;            // spanning-tree roots of gR
  std::vector<int> roots_c_transpose;  // spanning-tree roots of gC^T
  std::string message;
};

/// True iff some node is simultaneously a spanning-tree root of gR and of the
/// transpose of gC; the report names a common root when one exists.
Assumption3Report assumption3_holds(const DirectedGraph& gR,
                                    const DirectedGraph& gC);

}  // namespace rpp
