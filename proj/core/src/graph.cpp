#include "ncspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ncspec/errors.hpp"

namespace ncspec {

void SimpleGraph::connect(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("SimpleGraph: loops are not allowed");
  adj_[u * n_ + v] = 1;
  adj_[v * n_ + u] = 1;
}

SimpleGraph SimpleGraph::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != n_) throw std::invalid_argument("SimpleGraph::permuted: bad permutation");
  SimpleGraph g(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) g.adj_[i * n_ + j] = adj_[order[i] * n_ + order[j]];
  return g;
}

SimpleGraph complete_multipartite(const std::vector<std::size_t>& sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<std::size_t> part_of;
  part_of.reserve(n);
  for (std::size_t p = 0; p < sizes.size(); ++p) part_of.insert(part_of.end(), sizes[p], p);
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.connect(u, v);
  return g;
}

std::vector<std::size_t> PartitionStructure::sizes() const {
  std::vector<std::size_t> s;
  s.reserve(classes.size());
  for (const auto& c : classes) s.push_back(c.size());
  return s;
}

std::vector<std::size_t> PartitionStructure::vertex_order() const {
  std::vector<std::size_t> order;
  order.reserve(total);
  for (const auto& c : classes) order.insert(order.end(), c.begin(), c.end());
  return order;
}

NCGraph non_commuting_graph(const FiniteGroup& group) {
  const auto z = center(group);
  NCGraph g;
  for (const auto& x : group.elements())
    if (std::find(z.begin(), z.end(), x) == z.end()) g.vertices.push_back(x);
  if (g.vertices.empty()) throw AbelianGroup(group.spec().display_name() + " is abelian");
  g.graph = SimpleGraph(g.vertices.size());
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v)
      if (!group.commute(g.vertices[u], g.vertices[v])) g.graph.connect(u, v);
  return g;
}

PartitionStructure partition_structure(const SimpleGraph& graph) {
  const std::size_t n = graph.order();
  // Components of the complement by BFS over non-edges.
  std::vector<long> component(n, -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    const long id = static_cast<long>(classes.size());
    classes.emplace_back();
    std::deque<std::size_t> queue{s};
    component[s] = id;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      classes.back().push_back(u);
      for (std::size_t v = 0; v < n; ++v)
        if (v != u && component[v] < 0 && !graph.adjacent(u, v)) {
          component[v] = id;
          queue.push_back(v);
        }
    }
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool same = component[u] == component[v];
      if (same && graph.adjacent(u, v))
        throw NotCompleteMultipartite("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                      " share a non-adjacency class but are adjacent");
      if (!same && !graph.adjacent(u, v))
        throw NotCompleteMultipartite("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                      " lie in different classes but are not adjacent");
    }

  std::stable_sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x.front() < y.front();
  });

  PartitionStructure p;
  p.total = n;
  for (const auto& c : classes) {
    if (!p.parts.empty() && p.parts.back().size == c.size())
      ++p.parts.back().count;
    else
      p.parts.push_back({c.size(), 1});
  }
  p.classes = std::move(classes);
  return p;
}

NCGraph part_major(const NCGraph& g, const PartitionStructure& partition) {
  const auto order = partition.vertex_order();
  NCGraph out;
  out.vertices.reserve(order.size());
  for (std::size_t k : order) out.vertices.push_back(g.vertices.at(k));
  out.graph = g.graph.permuted(order);
  return out;
}

std::vector<PartSize> expected_partition(const GroupSpec& spec) {
  std::map<std::size_t, std::size_t, std::greater<>> parts;
  auto add = [&](long size, long count) {
    if (size > 0 && count > 0)
      parts[static_cast<std::size_t>(size)] += static_cast<std::size_t>(count);
  };
  const long n = spec.n();
  switch (spec.kind()) {
    case Family::GeneralizedQuaternion:
      add(2 * n - 2, 1);
      add(2, n);
      break;
    case Family::Quasidihedral: {
      const long half = spec.a_order();  // 2^(n-1)
      add(half - 2, 1);
      add(2, half / 2);
      break;
    }
    case Family::USixN:
      add(2 * n, 1);
      add(n, 3);
      break;
    case Family::Metacyclic: {
      const long m = spec.m();
      if (m % 2 == 1) {
        add((m - 1) * n, 1);
        add(n, m);
      } else {
        add((m / 2 - 1) * 2 * n, 1);
        add(2 * n, m / 2);
      }
      break;
    }
  }
  std::vector<PartSize> out;
  for (const auto& [size, count] : parts) out.push_back({size, count});
  return out;
}

IntMatrix distance_matrix(const SimpleGraph& graph) {
  const std::size_t n = graph.order();
  IntMatrix d(n);
  std::vector<long> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v)
        if (dist[v] < 0 && graph.adjacent(u, v)) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < 0)
        throw DisconnectedGraph("no path between vertices " + std::to_string(s) + " and " +
                                std::to_string(v));
      d(s, v) = dist[v];
    }
  }
  return d;
}

std::vector<Integer> transmissions(const IntMatrix& distances) { return distances.row_sums(); }

namespace {

IntMatrix with_transmission_diagonal(const IntMatrix& distances, int sign) {
  const auto tr = transmissions(distances);
  IntMatrix out(distances.order());
  for (std::size_t i = 0; i < distances.order(); ++i)
    for (std::size_t j = 0; j < distances.order(); ++j)
      out(i, j) = sign > 0 ? distances(i, j) : Integer(-distances(i, j));
  for (std::size_t i = 0; i < distances.order(); ++i) out(i, i) += tr[i];
  return out;
}

}  // namespace

IntMatrix dl_matrix(const IntMatrix& distances) { return with_transmission_diagonal(distances, -1); }
IntMatrix dq_matrix(const IntMatrix& distances) { return with_transmission_diagonal(distances, +1); }

}  // namespace ncspec
