#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topoedge/matrix.hpp"

namespace topoedge {

enum class Split : uint8_t { None = 0, Train = 1, Val = 2, Test = 3 };

const char* split_name(Split s);
Split split_from_name(const std::string& name);

// Immutable undirected graph with both adjacency directions materialized.
// Edge ids index `edges`, which stores each undirected edge once as (u, v)
// with u < v. Construct through build_graph; safe to share read-only.
struct AttributedGraph {
  int64_t n = 0;
  int64_t m = 0;
  std::vector<std::pair<int64_t, int64_t>> edges;  // canonical (u < v), id = index
  std::vector<int64_t> adj_offsets;                // n + 1
  std::vector<int64_t> adj_nodes;                  // 2m, sorted per row
  std::vector<int64_t> adj_edge_ids;               // 2m, parallel to adj_nodes
  std::vector<int64_t> degrees;                    // n
  Matrix node_features;                            // n×d, or empty
  Matrix edge_features;                            // m×d', or empty

  std::span<const int64_t> neighbors(int64_t v) const {
    return {adj_nodes.data() + adj_offsets[v],
            static_cast<size_t>(adj_offsets[v + 1] - adj_offsets[v])};
  }
  std::span<const int64_t> incident_edges(int64_t v) const {
    return {adj_edge_ids.data() + adj_offsets[v],
            static_cast<size_t>(adj_offsets[v + 1] - adj_offsets[v])};
  }
  int64_t degree(int64_t v) const { return degrees[v]; }
};

// Per-edge class labels (-1 = unlabeled) plus split assignment.
struct EdgeLabeling {
  int class_count = 0;                      // C
  std::vector<int> labels;                  // per edge id
  std::vector<Split> splits;                // per edge id
  std::vector<int64_t> class_counts_train;  // |E_k| over the Train split

  bool has_splits() const;
  int64_t labeled_count() const;
  std::vector<int64_t> labeled_edges() const;           // ascending edge ids
  std::vector<int64_t> edges_in_split(Split s) const;   // ascending edge ids
  void recount_train();                                 // refresh class_counts_train
};

// Builds the CSR adjacency from a canonical duplicate-free edge list.
// Throws DataError on self-loops, duplicates, or out-of-range endpoints.
AttributedGraph build_graph(int64_t n,
                            std::vector<std::pair<int64_t, int64_t>> undirected_edges,
                            Matrix node_features = {}, Matrix edge_features = {});

// Checks every AttributedGraph invariant (adjacency symmetry, degree sums,
// feature row counts, ...). Throws DataError naming the first violation.
void validate(const AttributedGraph& g);
void validate(const AttributedGraph& g, const EdgeLabeling& lab);

}  // namespace topoedge
