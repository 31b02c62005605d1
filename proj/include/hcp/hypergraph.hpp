#pragma once

#include <set>
#include <string>
#include <vector>

#include "hcp/bigint.hpp"

namespace hcp {

/// k-uniform hypergraph on vertex ids 0..num_vertices-1. Edges are sorted
/// k-element id lists, pairwise distinct as sets. Immutable after construction.
class UniformHypergraph {
  public:
    UniformHypergraph(int k, int num_vertices, std::vector<std::vector<int>> edges);

    int k() const { return k_; }
    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int id) const { return edges_[id]; }
    /// Edge ids containing v, ascending.
    const std::vector<int>& incident_edges(int v) const { return incidence_[v]; }
    int degree(int v) const { return static_cast<int>(incidence_[v].size()); }

    bool is_connected() const;

    /// Vertex relabeling v -> perm[v]; used by round-trip determinism checks.
    UniformHypergraph relabeled(const std::vector<int>& perm) const;

  private:
    int k_;
    int num_vertices_;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incidence_;
};

/// Hyperpath P_n^k: vertices 0..n(k-1), edge t is {(k-1)(t-1),...,(k-1)t}.
UniformHypergraph make_hyperpath(int n, int k);

/// Starlike S^k_{n_1..n_m}: vertex 0 shared, arm i a hyperpath of length n_i
/// occupying the next n_i(k-1) fresh ids with its first edge through vertex 0.
UniformHypergraph make_starlike(int k, const std::vector<int>& arm_lengths);

/// Hyperstar S_m^k = starlike with m arms of length 1.
UniformHypergraph make_hyperstar(int m, int k);

/// Vertices contained in exactly one edge.
std::set<int> cored_vertices(const UniformHypergraph& h);

/// True iff deleting v (shrinking incident edges to e\{v}) disconnects the
/// remaining vertex set. Requires a connected input.
bool is_cut_vertex(const UniformHypergraph& h, int v);

}  // namespace hcp
