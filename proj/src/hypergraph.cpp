#include "hcp/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hcp {

namespace {

struct UnionFind {
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

}  // namespace

UniformHypergraph::UniformHypergraph(int k, int num_vertices, std::vector<std::vector<int>> edges)
    : k_(k), num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (k_ < 2) throw std::invalid_argument("UniformHypergraph: k must be >= 2");
    if (num_vertices_ < 1) throw std::invalid_argument("UniformHypergraph: need at least one vertex");
    std::set<std::vector<int>> seen;
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != k_)
            throw std::invalid_argument("UniformHypergraph: edge is not k-uniform");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("UniformHypergraph: repeated vertex in edge");
        if (e.front() < 0 || e.back() >= num_vertices_)
            throw std::invalid_argument("UniformHypergraph: vertex id out of range");
        if (!seen.insert(e).second)
            throw std::invalid_argument("UniformHypergraph: duplicate edge");
    }
    incidence_.resize(num_vertices_);
    for (int id = 0; id < num_edges(); ++id) {
        for (int v : edges_[id]) incidence_[v].push_back(id);
    }
}

bool UniformHypergraph::is_connected() const {
    if (num_vertices_ <= 1) return true;
    UnionFind uf(num_vertices_);
    for (const auto& e : edges_) {
        for (size_t i = 1; i < e.size(); ++i) uf.unite(e[0], e[i]);
    }
    int root = uf.find(0);
    for (int v = 1; v < num_vertices_; ++v) {
        if (uf.find(v) != root) return false;
    }
    return true;
}

UniformHypergraph UniformHypergraph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != num_vertices_)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    std::vector<std::vector<int>> edges;
    edges.reserve(edges_.size());
    for (const auto& e : edges_) {
        std::vector<int> m;
        m.reserve(e.size());
        for (int v : e) m.push_back(perm[v]);
        edges.push_back(std::move(m));
    }
    return UniformHypergraph(k_, num_vertices_, std::move(edges));
}

UniformHypergraph make_hyperpath(int n, int k) {
    if (n < 1) throw std::invalid_argument("make_hyperpath: need n >= 1 edges");
    if (k < 2) throw std::invalid_argument("make_hyperpath: need k >= 2");
    std::vector<std::vector<int>> edges;
    edges.reserve(n);
    for (int t = 1; t <= n; ++t) {
        std::vector<int> e;
        e.reserve(k);
        for (int v = (k - 1) * (t - 1); v <= (k - 1) * t; ++v) e.push_back(v);
        edges.push_back(std::move(e));
    }
    return UniformHypergraph(k, n * (k - 1) + 1, std::move(edges));
}

UniformHypergraph make_starlike(int k, const std::vector<int>& arm_lengths) {
    if (arm_lengths.empty()) throw std::invalid_argument("make_starlike: need at least one arm");
    if (k < 2) throw std::invalid_argument("make_starlike: need k >= 2");
    int total = 0;
    for (int n : arm_lengths) {
        if (n < 1) throw std::invalid_argument("make_starlike: arm lengths must be >= 1");
        total += n;
    }
    std::vector<std::vector<int>> edges;
    int offset = 1;  // first fresh id of the current arm
    for (int n : arm_lengths) {
        auto global = [&](int local) { return local == 0 ? 0 : offset + local - 1; };
        for (int t = 1; t <= n; ++t) {
            std::vector<int> e;
            e.reserve(k);
            for (int v = (k - 1) * (t - 1); v <= (k - 1) * t; ++v) e.push_back(global(v));
            edges.push_back(std::move(e));
        }
        offset += n * (k - 1);
    }
    return UniformHypergraph(k, 1 + (k - 1) * total, std::move(edges));
}

UniformHypergraph make_hyperstar(int m, int k) {
    if (m < 1) throw std::invalid_argument("make_hyperstar: need m >= 1 edges");
    return make_starlike(k, std::vector<int>(m, 1));
}

std::set<int> cored_vertices(const UniformHypergraph& h) {
    std::set<int> out;
    for (int v = 0; v < h.num_vertices(); ++v) {
        if (h.degree(v) == 1) out.insert(v);
    }
    return out;
}

bool is_cut_vertex(const UniformHypergraph& h, int v) {
    if (v < 0 || v >= h.num_vertices()) throw std::invalid_argument("is_cut_vertex: bad vertex");
    if (!h.is_connected()) throw std::invalid_argument("is_cut_vertex: input not connected");
    if (h.num_vertices() <= 2) return false;
    // H~ keeps non-incident edges and shrinks incident ones to e\{v}.
    UnionFind uf(h.num_vertices());
    for (const auto& e : h.edges()) {
        int anchor = -1;
        for (int u : e) {
            if (u == v) continue;
            if (anchor < 0) {
                anchor = u;
            } else {
                uf.unite(anchor, u);
            }
        }
    }
    int root = -1;
    for (int u = 0; u < h.num_vertices(); ++u) {
        if (u == v) continue;
        if (root < 0) {
            root = uf.find(u);
        } else if (uf.find(u) != root) {
            return true;
        }
    }
    return false;
}

}  // namespace hcp
