#include "topoedge/graph.hpp"

#include <algorithm>
#include <numeric>

#include "topoedge/error.hpp"

namespace topoedge {

const char* split_name(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
    default: return "none";
  }
}

Split split_from_name(const std::string& name) {
  if (name == "train") return Split::Train;
  if (name == "val") return Split::Val;
  if (name == "test") return Split::Test;
  if (name == "none") return Split::None;
  throw DataError("unknown split name: " + name);
}

bool EdgeLabeling::has_splits() const {
  for (Split s : splits)
    if (s != Split::None) return true;
  return false;
}

int64_t EdgeLabeling::labeled_count() const {
  int64_t c = 0;
  for (int l : labels) c += (l >= 0);
  return c;
}

std::vector<int64_t> EdgeLabeling::labeled_edges() const {
  std::vector<int64_t> out;
  for (int64_t e = 0; e < static_cast<int64_t>(labels.size()); ++e)
    if (labels[e] >= 0) out.push_back(e);
  return out;
}

std::vector<int64_t> EdgeLabeling::edges_in_split(Split s) const {
  std::vector<int64_t> out;
  for (int64_t e = 0; e < static_cast<int64_t>(splits.size()); ++e)
    if (splits[e] == s) out.push_back(e);
  return out;
}

void EdgeLabeling::recount_train() {
  class_counts_train.assign(class_count, 0);
  for (size_t e = 0; e < labels.size(); ++e)
    if (splits[e] == Split::Train && labels[e] >= 0) ++class_counts_train[labels[e]];
}

AttributedGraph build_graph(int64_t n,
                            std::vector<std::pair<int64_t, int64_t>> undirected_edges,
                            Matrix node_features, Matrix edge_features) {
  AttributedGraph g;
  g.n = n;
  g.m = static_cast<int64_t>(undirected_edges.size());
  for (auto& [u, v] : undirected_edges) {
    if (u == v) throw DataError("self-loop on node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      throw DataError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                      std::to_string(v) + ")");
  }
  g.edges = std::move(undirected_edges);

  {
    auto sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DataError("duplicate undirected edge in edge list");
  }

  g.degrees.assign(n, 0);
  for (const auto& [u, v] : g.edges) {
    ++g.degrees[u];
    ++g.degrees[v];
  }
  g.adj_offsets.assign(n + 1, 0);
  for (int64_t v = 0; v < n; ++v) g.adj_offsets[v + 1] = g.adj_offsets[v] + g.degrees[v];
  g.adj_nodes.resize(2 * g.m);
  g.adj_edge_ids.resize(2 * g.m);
  std::vector<int64_t> cursor(g.adj_offsets.begin(), g.adj_offsets.end() - 1);
  for (int64_t e = 0; e < g.m; ++e) {
    const auto& [u, v] = g.edges[e];
    g.adj_nodes[cursor[u]] = v;
    g.adj_edge_ids[cursor[u]++] = e;
    g.adj_nodes[cursor[v]] = u;
    g.adj_edge_ids[cursor[v]++] = e;
  }
  // Sort each row by (neighbor, edge id) for a fixed iteration order.
  for (int64_t v = 0; v < n; ++v) {
    int64_t lo = g.adj_offsets[v], hi = g.adj_offsets[v + 1];
    std::vector<std::pair<int64_t, int64_t>> row(hi - lo);
    for (int64_t i = lo; i < hi; ++i) row[i - lo] = {g.adj_nodes[i], g.adj_edge_ids[i]};
    std::sort(row.begin(), row.end());
    for (int64_t i = lo; i < hi; ++i) {
      g.adj_nodes[i] = row[i - lo].first;
      g.adj_edge_ids[i] = row[i - lo].second;
    }
  }

  if (!node_features.empty() && node_features.rows != n)
    throw DataError("node feature matrix has " + std::to_string(node_features.rows) +
                    " rows, expected " + std::to_string(n));
  if (!edge_features.empty() && edge_features.rows != g.m)
    throw DataError("edge feature matrix has " + std::to_string(edge_features.rows) +
                    " rows, expected " + std::to_string(g.m));
  g.node_features = std::move(node_features);
  g.edge_features = std::move(edge_features);
  return g;
}

void validate(const AttributedGraph& g) {
  if (g.m != static_cast<int64_t>(g.edges.size())) throw DataError("m != edges.size()");
  if (static_cast<int64_t>(g.adj_offsets.size()) != g.n + 1)
    throw DataError("adj_offsets size mismatch");
  if (static_cast<int64_t>(g.adj_nodes.size()) != 2 * g.m ||
      static_cast<int64_t>(g.adj_edge_ids.size()) != 2 * g.m)
    throw DataError("adjacency array size mismatch");

  int64_t degree_sum = std::accumulate(g.degrees.begin(), g.degrees.end(), int64_t{0});
  if (degree_sum != 2 * g.m) throw DataError("sum of degrees != 2m");

  std::vector<std::pair<int64_t, int64_t>> seen;
  seen.reserve(g.m);
  for (int64_t e = 0; e < g.m; ++e) {
    const auto& [u, v] = g.edges[e];
    if (u == v) throw DataError("self-loop at edge " + std::to_string(e));
    if (u > v) throw DataError("non-canonical edge order at edge " + std::to_string(e));
    if (u < 0 || v >= g.n) throw DataError("endpoint out of range at edge " + std::to_string(e));
    seen.push_back({u, v});
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw DataError("duplicate undirected edge");

  for (int64_t v = 0; v < g.n; ++v) {
    if (g.adj_offsets[v + 1] - g.adj_offsets[v] != g.degrees[v])
      throw DataError("degree does not match adjacency row length at node " +
                      std::to_string(v));
    for (int64_t i = g.adj_offsets[v]; i < g.adj_offsets[v + 1]; ++i) {
      int64_t w = g.adj_nodes[i];
      int64_t e = g.adj_edge_ids[i];
      if (e < 0 || e >= g.m) throw DataError("bad incident edge id");
      const auto& [a, b] = g.edges[e];
      if (!((a == v && b == w) || (a == w && b == v)))
        throw DataError("incident edge id does not match (node, neighbor) pair");
      // Symmetry: w must list v back.
      auto nb = g.neighbors(w);
      if (!std::binary_search(nb.begin(), nb.end(), v))
        throw DataError("adjacency not symmetric between " + std::to_string(v) + " and " +
                        std::to_string(w));
    }
  }

  if (!g.node_features.empty() && g.node_features.rows != g.n)
    throw DataError("node feature row count mismatch");
  if (!g.edge_features.empty() && g.edge_features.rows != g.m)
    throw DataError("edge feature row count mismatch");
}

void validate(const AttributedGraph& g, const EdgeLabeling& lab) {
  validate(g);
  if (static_cast<int64_t>(lab.labels.size()) != g.m ||
      static_cast<int64_t>(lab.splits.size()) != g.m)
    throw DataError("labeling size does not match edge count");
  if (lab.class_count < 2) throw DataError("class_count must be >= 2");
  for (int64_t e = 0; e < g.m; ++e) {
    if (lab.labels[e] >= lab.class_count)
      throw DataError("label " + std::to_string(lab.labels[e]) + " >= class count at edge " +
                      std::to_string(e));
    if (lab.labels[e] < 0 && lab.splits[e] != Split::None)
      throw DataError("unlabeled edge " + std::to_string(e) + " has a split assignment");
  }
  if (static_cast<int64_t>(lab.class_counts_train.size()) != lab.class_count)
    throw DataError("class_counts_train size mismatch");
  std::vector<int64_t> counts(lab.class_count, 0);
  for (int64_t e = 0; e < g.m; ++e)
    if (lab.splits[e] == Split::Train && lab.labels[e] >= 0) ++counts[lab.labels[e]];
  if (counts != lab.class_counts_train) throw DataError("class_counts_train is stale");
}

}  // namespace topoedge
