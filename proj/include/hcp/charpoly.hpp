#pragma once

#include <vector>

#include "hcp/factored_poly.hpp"

namespace hcp {

/// Iterates h_s = g^{s-1}(1) of the Moebius map g(x) = t/(t-x) in t = lambda^k:
/// h_0 = 0, h_1 = 1, h_{s+1} = t/(t - h_s).
class HIterates {
  public:
    HIterates();
    const TRat& h(int s);

  private:
    std::vector<TRat> table_;
};

/// h_s = g^{s-1}(1) as a reduced ratio of t-polynomials.
TRat h_iterate(int k, int s);

/// Count of the stratum B_s among stable hyperpath configurations:
/// k^{s(k-2)}((k-1)^{k-1} - k^{k-2})(k-1)^{(n-s-1)(k-1)} for s < n, k^{n(k-2)} at s = n.
Int mu(int n, int k, int s);
std::vector<Int> mu_row(int n, int k);

/// Single-edge characteristic polynomial:
/// lambda^{k(k-1)^{k-1} - k^{k-1}} (lambda^k - 1)^{k^{k-2}}.
FactoredCharPoly charpoly_single_edge(int k);

/// Hyperpath P_n^k, by the recursion
/// lambda^{(k-2)(k-1)^{n(k-1)}} prod_s ((t - h_s)/lambda^{k-1})^{mu(n,k,s)} * path(n-1,k)^{(k-1)^{k-1}}.
FactoredCharPoly charpoly_path(int n, int k);

/// Hyperstar S_m^k closed form.
FactoredCharPoly charpoly_star(int m, int k);

/// Starlike S^k_{n_1..n_m}; the multi-index product is grouped by the multiset
/// of the s-values within arms of equal length.
FactoredCharPoly charpoly_starlike(int k, const std::vector<int>& arm_lengths);

/// Expected resultant degree r(k-1)^{r-1} for an r-vertex k-uniform hypergraph.
Int resultant_degree(int num_vertices, int k);

struct RootCheckReport {
    bool all_matched = false;
    int roots_checked = 0;
    std::vector<std::string> unmatched;  // human-readable offending roots
};

/// Diagnostic for hyperpath results: every root tau of every t-factor must be
/// the square of an eigenvalue 2cos(j*pi/(m+1)) of a simple path on m <= n+1
/// vertices, within tol. Floating point; never an acceptance gate.
RootCheckReport power_hypergraph_root_check(const FactoredCharPoly& f, int n, double tol);

}  // namespace hcp
