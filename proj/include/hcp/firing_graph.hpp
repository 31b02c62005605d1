#pragma once

#include <string>
#include <vector>

#include "hcp/chipfiring.hpp"
#include "hcp/hypergraph.hpp"

namespace hcp {

struct FiringArrow {
    int from = 0;
    int to = 0;
    int fired_vertex = 0;
    int edge_id = 0;
    bool operator==(const FiringArrow&) const = default;
};

struct StructureReport {
    bool ok = false;
    int stratum = 0;
    int cycles_found = 0;
    std::vector<int> cycle_lengths;
    bool gprime_nonempty = false;
    std::vector<std::string> violations;
};

struct InvariantReport {
    bool ok = false;
    int joint_firings_checked = 0;
    int equal_weight_nodes_checked = 0;
    std::vector<std::string> violations;
};

/// Left anti-lexicographical order: c < c' iff weight(c) < weight(c'), or the
/// weights tie and c exceeds c' at the first differing non-bank vertex.
bool anti_lex_less(const Configuration& c, const Configuration& cp);

/// Directed graph of configurations generated from a stable root on a
/// hyperpath with bank 0: the bank fires once on its edge, then every
/// non-stable frontier node fires its largest chargeable vertex once per
/// containing edge, until the frontier is entirely stable.
class FiringGraph {
  public:
    static FiringGraph build(const UniformHypergraph& path, const Configuration& c0);
    static FiringGraph build(const UniformHypergraph& path, const Configuration& c0,
                             const CriticalTable& table);

    const UniformHypergraph& hypergraph() const { return path_; }
    const std::vector<Configuration>& nodes() const { return nodes_; }
    const std::vector<FiringArrow>& arrows() const { return arrows_; }
    int root() const { return 0; }
    int stratum() const { return stratum_; }
    /// Tagged at construction: first reached through the alpha_{s(k-1), e_{s+1}}
    /// arrow, or downstream of such a node.
    const std::vector<char>& in_gprime() const { return gprime_; }

    StructureReport validate_structure() const;
    InvariantReport check_firing_invariants() const;

    std::string to_dot(const std::string& name = "firing_graph") const;

  private:
    explicit FiringGraph(UniformHypergraph path) : path_(std::move(path)) {}

    UniformHypergraph path_;
    int stratum_ = 0;
    std::vector<Configuration> nodes_;
    std::vector<FiringArrow> arrows_;
    std::vector<char> gprime_;
    std::vector<int> parent_arrow_;  // arrow that first reached each node; -1 for root
};

}  // namespace hcp
