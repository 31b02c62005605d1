#include "hcp/firing_graph.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hcp {

bool anti_lex_less(const Configuration& c, const Configuration& cp) {
    long w = c.weight(), wp = cp.weight();
    if (w != wp) return w < wp;
    for (int v = 0; v < c.size(); ++v) {
        if (v == c.bank) continue;
        if (c.chips[v] != cp.chips[v]) return c.chips[v] > cp.chips[v];
    }
    return false;
}

FiringGraph FiringGraph::build(const UniformHypergraph& path, const Configuration& c0) {
    CriticalTable table(path.k());
    return build(path, c0, table);
}

FiringGraph FiringGraph::build(const UniformHypergraph& path, const Configuration& c0,
                               const CriticalTable& table) {
    const int k = path.k();
    const int n = path.num_edges();
    if (c0.bank != 0) throw std::invalid_argument("FiringGraph: bank must be vertex 0");
    if (path.degree(0) != 1) throw std::invalid_argument("FiringGraph: bank must be a cored vertex");
    if (!is_stable_hyper(path, c0)) throw std::invalid_argument("FiringGraph: root not stable");

    FiringGraph fg(path);
    fg.stratum_ = classify_stable(path, c0, table);
    const int s = fg.stratum_;
    const int gprime_vertex = s * (k - 1);  // fired vertex opening G'
    const int gprime_edge = s;              // edge index of e_{s+1}

    std::map<std::vector<int>, int> index;
    auto intern = [&](const Configuration& c, bool tag, int via_arrow) {
        auto it = index.find(c.chips);
        if (it != index.end()) return std::pair<int, bool>(it->second, false);
        int id = static_cast<int>(fg.nodes_.size());
        index.emplace(c.chips, id);
        fg.nodes_.push_back(c);
        fg.gprime_.push_back(tag ? 1 : 0);
        fg.parent_arrow_.push_back(via_arrow);
        return std::pair<int, bool>(id, true);
    };

    intern(c0, false, -1);

    // Step 2: the bank fires on its unique edge.
    const int bank_edge = path.incident_edges(0).front();
    Configuration cbar = fire_hyper(path, c0, 0, bank_edge);
    bool seed_tag = (0 == gprime_vertex && bank_edge == gprime_edge && s < n);
    fg.arrows_.push_back({0, -1, 0, bank_edge});
    auto [cbar_id, cbar_new] = intern(cbar, seed_tag, 0);
    fg.arrows_.back().to = cbar_id;

    std::vector<int> frontier;
    if (cbar_new) frontier.push_back(cbar_id);

    // Step 3: expand non-stable frontier nodes until the frontier is stable.
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int id : frontier) {
            const Configuration node = fg.nodes_[id];  // copy: nodes_ may reallocate
            if (is_stable_hyper(path, node)) continue;
            int u = -1;
            for (int v = path.num_vertices() - 1; v >= 1; --v) {
                if (node.chips[v] >= k - 1) {
                    u = v;
                    break;
                }
            }
            for (int eid : path.incident_edges(u)) {
                Configuration fired = fire_hyper(path, node, u, eid);
                int arrow_id = static_cast<int>(fg.arrows_.size());
                fg.arrows_.push_back({id, -1, u, eid});
                bool tag = fg.gprime_[id] != 0 ||
                           (u == gprime_vertex && eid == gprime_edge && s < n);
                auto [to_id, is_new] = intern(fired, tag, arrow_id);
                fg.arrows_.back().to = to_id;
                if (is_new) next.push_back(to_id);
            }
        }
        frontier = std::move(next);
    }
    return fg;
}

namespace {

// Elementary circuits of the subgraph induced by `keep`, by DFS with a
// canonical smallest start node (graphs here have a handful of nodes).
std::vector<std::vector<int>> elementary_cycles(int num_nodes, const std::vector<FiringArrow>& arrows,
                                                const std::vector<char>& keep) {
    std::vector<std::vector<int>> out_edges(num_nodes);
    for (const auto& a : arrows) {
        if (keep[a.from] && keep[a.to]) out_edges[a.from].push_back(a.to);
    }
    std::vector<std::vector<int>> cycles;
    std::vector<int> stack;
    std::vector<char> on_stack(num_nodes, 0);
    // Only cycles whose minimum node equals the start are recorded once.
    auto dfs = [&](auto&& self, int start, int v) -> void {
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : out_edges[v]) {
            if (w == start) {
                cycles.push_back(stack);
            } else if (!on_stack[w] && w > start) {
                self(self, start, w);
            }
        }
        on_stack[v] = 0;
        stack.pop_back();
    };
    for (int v = 0; v < num_nodes; ++v) {
        if (keep[v]) dfs(dfs, v, v);
    }
    return cycles;
}

std::string config_label(const Configuration& c) {
    std::ostringstream os;
    os << "(";
    for (int v = 0; v < c.size(); ++v) {
        if (v > 0) os << ",";
        if (v == c.bank && !c.bank_tracked) {
            os << u8"•";
        } else {
            os << c.chips[v];
        }
    }
    os << ")";
    return os.str();
}

}  // namespace

StructureReport FiringGraph::validate_structure() const {
    StructureReport rep;
    rep.stratum = stratum_;
    const int k = path_.k();
    const int n = path_.num_edges();

    std::vector<char> cycle_part(nodes_.size(), 0);
    bool has_gprime = false;
    for (size_t i = 0; i < nodes_.size(); ++i) {
        cycle_part[i] = gprime_[i] ? 0 : 1;
        has_gprime = has_gprime || gprime_[i];
    }
    rep.gprime_nonempty = has_gprime;

    auto cycles = elementary_cycles(static_cast<int>(nodes_.size()), arrows_, cycle_part);
    rep.cycles_found = static_cast<int>(cycles.size());
    for (const auto& cyc : cycles) rep.cycle_lengths.push_back(static_cast<int>(cyc.size()));

    if (rep.cycles_found != stratum_) {
        rep.violations.push_back("expected " + std::to_string(stratum_) + " cycles, found " +
                                 std::to_string(rep.cycles_found));
    }
    for (const auto& cyc : cycles) {
        if (static_cast<int>(cyc.size()) != k) {
            rep.violations.push_back("cycle of length " + std::to_string(cyc.size()) +
                                     " through " + config_label(nodes_[cyc.front()]) +
                                     ", expected length " + std::to_string(k));
        }
    }
    if (has_gprime != (stratum_ < n)) {
        rep.violations.push_back(std::string("G' should be ") +
                                 (stratum_ < n ? "nonempty" : "empty"));
    }
    for (const auto& a : arrows_) {
        if (gprime_[a.from] && !gprime_[a.to]) {
            rep.violations.push_back("arrow from G' back to the cycle part: " +
                                     config_label(nodes_[a.from]) + " -> " +
                                     config_label(nodes_[a.to]));
        }
    }
    for (size_t i = 0; i < nodes_.size(); ++i) {
        if (gprime_[i] && !anti_lex_less(nodes_[0], nodes_[i])) {
            rep.violations.push_back("root not anti-lex below G' node " + config_label(nodes_[i]));
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

InvariantReport FiringGraph::check_firing_invariants() const {
    InvariantReport rep;
    const int k = path_.k();
    const int n = path_.num_edges();
    const long w0 = nodes_[0].weight();

    for (const auto& a : arrows_) {
        if (a.fired_vertex == 0) continue;  // the bank arrow
        if (a.fired_vertex % (k - 1) != 0) continue;
        int t = a.fired_vertex / (k - 1);
        if (t < 1 || t > n) continue;
        rep.joint_firings_checked += 1;
        if (nodes_[a.from].chips[a.fired_vertex] != k - 1) {
            rep.violations.push_back("joint vertex " + std::to_string(a.fired_vertex) +
                                     " fired at " + config_label(nodes_[a.from]) + " with " +
                                     std::to_string(nodes_[a.from].chips[a.fired_vertex]) +
                                     " chips, expected exactly " + std::to_string(k - 1));
        }
    }

    for (size_t i = 0; i < nodes_.size(); ++i) {
        long w = nodes_[i].weight();
        if (w < w0) {
            rep.violations.push_back("node " + config_label(nodes_[i]) + " has weight " +
                                     std::to_string(w) + " below the root weight " +
                                     std::to_string(w0));
        }
        if (w != w0 || i == 0) continue;
        // Equality condition: along the tree path from the root, vertices
        // 1..k-1 each fired exactly once on e_1.
        rep.equal_weight_nodes_checked += 1;
        std::vector<int> fired_on_e1(k, 0);
        int node = static_cast<int>(i);
        while (parent_arrow_[node] >= 0) {
            const FiringArrow& a = arrows_[parent_arrow_[node]];
            if (a.edge_id == 0 && a.fired_vertex >= 1 && a.fired_vertex <= k - 1) {
                fired_on_e1[a.fired_vertex] += 1;
            }
            node = a.from;
        }
        for (int v = 1; v <= k - 1; ++v) {
            if (fired_on_e1[v] != 1) {
                rep.violations.push_back("equal-weight node " + config_label(nodes_[i]) +
                                         ": vertex " + std::to_string(v) + " fired " +
                                         std::to_string(fired_on_e1[v]) + " times on e_1");
            }
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

std::string FiringGraph::to_dot(const std::string& name) const {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  rankdir=LR;\n";
    for (size_t i = 0; i < nodes_.size(); ++i) {
        os << "  n" << i << " [label=\"" << config_label(nodes_[i]) << "\"";
        if (i == 0) os << ", shape=doublecircle";
        if (gprime_[i]) os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& a : arrows_) {
        os << "  n" << a.from << " -> n" << a.to << " [label=\"(" << a.fired_vertex << ",e"
           << (a.edge_id + 1) << ")\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace hcp
