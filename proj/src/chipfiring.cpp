#include "hcp/chipfiring.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hcp {

Configuration Configuration::omitted_bank(std::vector<int> non_bank_values, int bank) {
    Configuration c;
    c.bank = bank;
    c.bank_tracked = false;
    c.chips.resize(non_bank_values.size() + 1, 0);
    int j = 0;
    for (int v = 0; v < c.size(); ++v) {
        if (v != bank) c.chips[v] = non_bank_values[j++];
    }
    return c;
}

Configuration Configuration::tracked(std::vector<int> all_values, int bank) {
    Configuration c;
    c.chips = std::move(all_values);
    c.bank = bank;
    c.bank_tracked = true;
    return c;
}

long Configuration::weight() const {
    long w = 0;
    for (int v = 0; v < size(); ++v) {
        if (v != bank) w += chips[v];
    }
    return w;
}

SimpleGraph SimpleGraph::complete(int k) {
    SimpleGraph g;
    g.n = k;
    g.adj.resize(k);
    for (int u = 0; u < k; ++u) {
        for (int v = 0; v < k; ++v) {
            if (u != v) g.adj[u].push_back(v);
        }
    }
    return g;
}

bool is_stable_graph(const SimpleGraph& g, const Configuration& c) {
    for (int v = 0; v < g.n; ++v) {
        if (v == c.bank) continue;
        if (c.chips[v] < 0 || c.chips[v] >= g.degree(v)) return false;
    }
    return true;
}

Configuration fire_graph(const SimpleGraph& g, const Configuration& c, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("fire_graph: bad vertex");
    if (v == c.bank) {
        if (!is_stable_graph(g, c))
            throw std::invalid_argument("fire_graph: bank fires only from a stable configuration");
    } else if (c.chips[v] < g.degree(v)) {
        throw std::invalid_argument("fire_graph: vertex has fewer chips than its degree");
    }
    Configuration out(c);
    if (v != c.bank || c.bank_tracked) out.chips[v] -= g.degree(v);
    for (int u : g.adj[v]) {
        if (u == c.bank && !c.bank_tracked) continue;
        out.chips[u] += 1;
    }
    return out;
}

namespace {

// Stabilize non-bank values on K_k in place; order only affects the firing
// sequence, not the fixed point.
void stabilize_Kk(int k, std::vector<int>& vals, FiringOrder order, unsigned rng_seed) {
    std::mt19937 rng(rng_seed);
    for (;;) {
        std::vector<int> fireable;
        for (int i = 0; i < k - 1; ++i) {
            if (vals[i] >= k - 1) fireable.push_back(i);
        }
        if (fireable.empty()) return;
        int pick;
        switch (order) {
            case FiringOrder::LowestFirst: pick = fireable.front(); break;
            case FiringOrder::HighestFirst: pick = fireable.back(); break;
            default:
                pick = fireable[std::uniform_int_distribution<size_t>(0, fireable.size() - 1)(rng)];
        }
        vals[pick] -= k - 1;
        for (int i = 0; i < k - 1; ++i) {
            if (i != pick) vals[i] += 1;
        }
    }
}

std::vector<int> non_bank_values(const Configuration& c) {
    std::vector<int> vals;
    vals.reserve(c.size() - 1);
    for (int v = 0; v < c.size(); ++v) {
        if (v != c.bank) vals.push_back(c.chips[v]);
    }
    return vals;
}

bool is_critical_values(int k, const std::vector<int>& vals, FiringOrder order, unsigned seed) {
    std::vector<int> work(vals);
    for (int& x : work) x += 1;  // the bank fires: one chip along each edge
    stabilize_Kk(k, work, order, seed);
    return work == vals;
}

long pow_long_checked(long base, long exp, long bound) {
    long out = 1;
    for (long i = 0; i < exp; ++i) {
        if (out > bound / std::max(base, 1L)) throw std::length_error("enumeration above bound");
        out *= base;
    }
    return out;
}

}  // namespace

bool is_critical_Kk(int k, const Configuration& c, FiringOrder order, unsigned rng_seed) {
    if (k < 2) throw std::invalid_argument("is_critical_Kk: k must be >= 2");
    std::vector<int> vals = non_bank_values(c);
    for (int x : vals) {
        if (x < 0 || x >= k - 1)
            throw std::invalid_argument("is_critical_Kk: configuration not stable");
    }
    return is_critical_values(k, vals, order, rng_seed);
}

namespace {

std::vector<Configuration> collect_criticals(const CriticalTable& table, int k) {
    std::vector<Configuration> out;
    for (long code = 0; code < table.stable_count(); ++code) {
        if (!table.critical_by_code(code)) continue;
        std::vector<int> vals(k - 1);
        long rest = code;
        for (int i = 0; i < k - 1; ++i) {
            vals[i] = static_cast<int>(rest % (k - 1));
            rest /= (k - 1);
        }
        out.push_back(Configuration::omitted_bank(std::move(vals), 0));
    }
    return out;
}

}  // namespace

std::vector<Configuration> critical_configs_Kk_serial(int k) {
    return collect_criticals(CriticalTable(k, /*parallel=*/false), k);
}

std::vector<Configuration> critical_configs_Kk(int k) {
    return collect_criticals(CriticalTable(k, /*parallel=*/true), k);
}

bool is_stable_hyper(const UniformHypergraph& h, const Configuration& c) {
    const int k = h.k();
    for (int v = 0; v < h.num_vertices(); ++v) {
        if (v == c.bank) continue;
        if (c.chips[v] < 0 || c.chips[v] >= k - 1) return false;
    }
    return true;
}

Configuration fire_hyper(const UniformHypergraph& h, const Configuration& c, int v, int edge_id) {
    if (edge_id < 0 || edge_id >= h.num_edges()) throw std::invalid_argument("fire_hyper: bad edge");
    const auto& e = h.edge(edge_id);
    if (std::find(e.begin(), e.end(), v) == e.end())
        throw std::invalid_argument("fire_hyper: vertex not on the fired edge");
    const int k = h.k();
    if (v == c.bank) {
        if (!is_stable_hyper(h, c))
            throw std::invalid_argument("fire_hyper: bank fires only from a stable configuration");
    } else if (c.chips[v] < k - 1) {
        throw std::invalid_argument("fire_hyper: vertex has fewer than k-1 chips");
    }
    Configuration out(c);
    if (v != c.bank || c.bank_tracked) out.chips[v] -= k - 1;
    for (int u : e) {
        if (u == v) continue;
        if (u == c.bank && !c.bank_tracked) continue;
        out.chips[u] += 1;
    }
    return out;
}

CriticalTable::CriticalTable(int k, bool parallel) : k_(k) {
    if (k < 2) throw std::invalid_argument("CriticalTable: k must be >= 2");
    long count = pow_long_checked(k - 1, k - 1, kEnumerationBound);
    table_.assign(count, 0);
#pragma omp parallel for schedule(static) if (parallel)
    for (long code = 0; code < count; ++code) {
        std::vector<int> vals(k - 1);
        long rest = code;
        for (int i = 0; i < k - 1; ++i) {
            vals[i] = static_cast<int>(rest % (k - 1));
            rest /= (k - 1);
        }
        table_[code] = is_critical_values(k, vals, FiringOrder::LowestFirst, 0) ? 1 : 0;
    }
}

int classify_stable(const UniformHypergraph& path, const Configuration& c) {
    CriticalTable table(path.k());
    return classify_stable(path, c, table);
}

int classify_stable(const UniformHypergraph& path, const Configuration& c,
                    const CriticalTable& table) {
    const int k = path.k();
    const int n = path.num_edges();
    if (c.bank != 0) throw std::invalid_argument("classify_stable: bank must be vertex 0");
    if (!is_stable_hyper(path, c)) throw std::invalid_argument("classify_stable: not stable");
    for (int i = 1; i <= n; ++i) {
        long code = 0;
        for (int j = k - 1; j >= 1; --j) {  // window values, high index most significant
            code = code * (k - 1) + c.chips[(i - 1) * (k - 1) + j];
        }
        if (!table.critical_by_code(code)) return i - 1;
    }
    return n;
}

long stable_enumeration_size(int n, int k) {
    return pow_long_checked(k - 1, static_cast<long>(n) * (k - 1), kEnumerationBound);
}

std::vector<Int> count_strata_serial(int n, int k) {
    const long total = stable_enumeration_size(n, k);
    const CriticalTable table(k, /*parallel=*/false);
    const UniformHypergraph path = make_hyperpath(n, k);
    std::vector<long> tally(n + 1, 0);
    const int r = n * (k - 1);
    std::vector<int> vals(r + 1, 0);
    for (long code = 0; code < total; ++code) {
        long rest = code;
        for (int v = 1; v <= r; ++v) {
            vals[v] = static_cast<int>(rest % (k - 1));
            rest /= (k - 1);
        }
        Configuration c;
        c.chips = vals;
        c.bank = 0;
        tally[classify_stable(path, c, table)] += 1;
    }
    return std::vector<Int>(tally.begin(), tally.end());
}

std::vector<Int> count_strata(int n, int k) {
    const long total = stable_enumeration_size(n, k);
    const CriticalTable table(k);
    const UniformHypergraph path = make_hyperpath(n, k);
    const int r = n * (k - 1);
    std::vector<long> tally(n + 1, 0);
#pragma omp parallel
    {
        std::vector<long> local(n + 1, 0);
        std::vector<int> vals(r + 1, 0);
#pragma omp for schedule(static) nowait
        for (long code = 0; code < total; ++code) {
            long rest = code;
            for (int v = 1; v <= r; ++v) {
                vals[v] = static_cast<int>(rest % (k - 1));
                rest /= (k - 1);
            }
            Configuration c;
            c.chips = vals;
            c.bank = 0;
            local[classify_stable(path, c, table)] += 1;
        }
#pragma omp critical
        for (int s = 0; s <= n; ++s) tally[s] += local[s];
    }
    return std::vector<Int>(tally.begin(), tally.end());
}

}  // namespace hcp
