#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ncspec/exact_algebra.hpp"
#include "ncspec/group.hpp"

namespace ncspec {

// Undirected simple graph on vertices 0..n-1 with a dense adjacency matrix.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  std::size_t order() const { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
  void connect(std::size_t u, std::size_t v);

  // Graph relabeled so that new vertex k is old vertex order[k].
  SimpleGraph permuted(const std::vector<std::size_t>& order) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
};

// K_{sizes[0], sizes[1], ...}, parts laid out consecutively.
SimpleGraph complete_multipartite(const std::vector<std::size_t>& sizes);

struct NCGraph {
  std::vector<GroupElement> vertices;
  SimpleGraph graph;

  std::size_t order() const { return vertices.size(); }
};

struct PartSize {
  std::size_t size;
  std::size_t count;
  friend bool operator==(const PartSize&, const PartSize&) = default;
};

struct PartitionStructure {
  // Distinct part sizes, descending, with how many parts have that size.
  std::vector<PartSize> parts;
  std::size_t total = 0;
  // Vertex indices of each part in part-major order: largest part first, ties
  // broken by the smallest member; members ascending.
  std::vector<std::vector<std::size_t>> classes;

  // Part sizes in part-major order, one entry per part.
  std::vector<std::size_t> sizes() const;
  std::size_t part_count() const { return classes.size(); }
  // Concatenation of classes: the part-major vertex permutation.
  std::vector<std::size_t> vertex_order() const;
};

// Vertices G \ Z(G) in canonical element order, edges between non-commuting
// pairs. Throws AbelianGroup when the vertex set is empty.
NCGraph non_commuting_graph(const FiniteGroup& group);

// Parts are the connected components of the complement. Throws
// NotCompleteMultipartite unless those components are cliques of the
// complement with every cross pair adjacent.
PartitionStructure partition_structure(const SimpleGraph& graph);
inline PartitionStructure partition_structure(const NCGraph& g) { return partition_structure(g.graph); }

// The same graph relabeled in part-major vertex order.
NCGraph part_major(const NCGraph& g, const PartitionStructure& partition);

// Claimed shape of the non-commuting graph of spec, as (size, count) pairs
// sorted like PartitionStructure::parts.
std::vector<PartSize> expected_partition(const GroupSpec& spec);

// All-pairs shortest path lengths via BFS from every vertex. Throws
// DisconnectedGraph if some pair is unreachable.
IntMatrix distance_matrix(const SimpleGraph& graph);

std::vector<Integer> transmissions(const IntMatrix& distances);
IntMatrix dl_matrix(const IntMatrix& distances);
IntMatrix dq_matrix(const IntMatrix& distances);

}  // namespace ncspec
