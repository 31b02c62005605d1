#pragma once

#include <vector>

#include "hcp/bigint.hpp"
#include "hcp/hypergraph.hpp"

namespace hcp {

/// Chip counts per vertex with a designated bank vertex. The bank entry is
/// usually the "omitted" sentinel (bank_tracked == false): chips[bank] is kept
/// at 0 and arithmetic on it is a no-op. With bank_tracked, the bank entry is a
/// real (possibly negative) balance.
struct Configuration {
    std::vector<int> chips;
    int bank = 0;
    bool bank_tracked = false;

    static Configuration omitted_bank(std::vector<int> non_bank_values, int bank = 0);
    static Configuration tracked(std::vector<int> all_values, int bank = 0);

    int size() const { return static_cast<int>(chips.size()); }
    /// Sum of non-bank entries.
    long weight() const;
    bool operator==(const Configuration&) const = default;
};

/// Simple graph used by the graph-side dollar game (complete graphs in practice).
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    static SimpleGraph complete(int k);
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

bool is_stable_graph(const SimpleGraph& g, const Configuration& c);

/// Fire v: c' = c - L e_v. Legal when c(v) >= deg(v) for v != bank, or v is the
/// bank and c is stable. Throws on an illegal firing.
Configuration fire_graph(const SimpleGraph& g, const Configuration& c, int v);

enum class FiringOrder { LowestFirst, HighestFirst, Random };

/// Recurrence test on K_k with bank 0: fire the bank once, stabilize, compare.
/// The stabilization order is irrelevant (validated empirically in tests); the
/// default is deterministic lowest-first. Throws if c is not stable.
bool is_critical_Kk(int k, const Configuration& c,
                    FiringOrder order = FiringOrder::LowestFirst, unsigned rng_seed = 0);

/// All critical configurations on K_k with bank 0, in lexicographic order of
/// the non-bank value vector. |result| = k^{k-2}.
std::vector<Configuration> critical_configs_Kk(int k);
std::vector<Configuration> critical_configs_Kk_serial(int k);

bool is_stable_hyper(const UniformHypergraph& h, const Configuration& c);

/// Fire v on edge e: v loses k-1 chips, every other vertex of e gains 1.
/// Throws if v is not on e or the firing is illegal.
Configuration fire_hyper(const UniformHypergraph& h, const Configuration& c, int v, int edge_id);

/// Criticality of every stable K_k configuration, indexed by the base-(k-1)
/// code of the non-bank values (value vector read low index = least significant).
class CriticalTable {
  public:
    explicit CriticalTable(int k, bool parallel = true);
    int k() const { return k_; }
    bool critical_by_code(long code) const { return table_[code] != 0; }
    long stable_count() const { return static_cast<long>(table_.size()); }

  private:
    int k_;
    std::vector<char> table_;
};

/// Stratum s of a stable configuration on the hyperpath P_n^k with bank 0: the
/// first s edge windows are critical on K_k and window s+1 (if any) is not.
int classify_stable(const UniformHypergraph& path, const Configuration& c);
int classify_stable(const UniformHypergraph& path, const Configuration& c,
                    const CriticalTable& table);

/// Exhaustive stratum counts [|B_0|, ..., |B_n|] over all (k-1)^{n(k-1)} stable
/// configurations. OpenMP-partitioned; the _serial variant is the reference.
std::vector<Int> count_strata(int n, int k);
std::vector<Int> count_strata_serial(int n, int k);

inline constexpr long kEnumerationBound = 10'000'000;

/// (k-1)^{n(k-1)} as a guarded long; throws when above kEnumerationBound.
long stable_enumeration_size(int n, int k);

}  // namespace hcp
