#pragma once

#include <utility>
#include <vector>

namespace pushsum {

/**
 * Directed graph on agents 0..n-1 with a mandatory self-loop at every
 * vertex. An arc (j, i) means agent j can send to agent i, i.e. j is an
 * in-neighbor of i and i is an out-neighbor of j. Self-loops are added
 * at construction and cannot be removed, so every in- and out-neighbor
 * set is nonempty.
 */
class Digraph {
public:
  explicit Digraph(int n);

  int n() const { return n_; }

  bool has_arc(int from, int to) const { return adj_[index(from, to)] != 0; }

  /// Adds the arc (from, to); idempotent. Throws std::out_of_range on a
  /// bad vertex id.
  void add_arc(int from, int to);

  /// Agents j with an arc (j, i), in ascending order; always contains i.
  std::vector<int> in_neighbors(int i) const;

  /// Agents k with an arc (j, k), in ascending order; always contains j.
  std::vector<int> out_neighbors(int j) const;

  int out_degree(int j) const;
  int in_degree(int i) const;

  /// All arcs (from, to) in lexicographic order, self-loops included.
  std::vector<std::pair<int, int>> arcs() const;

  bool has_all_self_loops() const;

  /// Graph on the same vertex set whose arc set is the union of both.
  Digraph united_with(const Digraph& other) const;

  static Digraph complete(int n);

  bool operator==(const Digraph& other) const = default;

private:
  int index(int from, int to) const;

  int n_ = 0;
  std::vector<unsigned char> adj_; // adj_[from * n + to]
};

/// True iff every ordered vertex pair is joined by a directed path
/// (forward and reverse reachability from vertex 0).
bool is_strongly_connected(const Digraph& g);

} // namespace pushsum
