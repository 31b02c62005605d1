#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcp/trat.hpp"

namespace hcp {

/// Raised by finalize() when the accumulated product is not a polynomial in
/// lambda: a factor keeps a negative exponent, the lambda power is negative,
/// or the scalar content does not come out to +1.
struct NotPolynomialError : std::runtime_error {
    explicit NotPolynomialError(const std::string& what) : std::runtime_error(what) {}
};

/// lambda^E * prod f_i(t)^{e_i} with t = lambda^k, exact big-integer exponents.
///
/// Accumulation phase: factor keys are kept primitive, positive-leading and
/// pairwise coprime (gcd refinement on insert), powers of t are folded into the
/// lambda exponent, and integer contents/signs are ledgered on the side.
/// finalize() checks that everything cancelled and freezes the value.
class FactoredCharPoly {
  public:
    explicit FactoredCharPoly(int k);

    int k() const { return k_; }
    const Int& lambda_exponent() const { return lambda_exp_; }
    const std::map<TPoly, Int>& factors() const { return factors_; }
    bool finalized() const { return finalized_; }

    void mul_lambda_power(const Int& e);
    /// Multiply by factor^exponent * lambda^(lambda_shift*exponent).
    void mul_factor(const TRat& factor, const Int& exponent, const Int& lambda_shift);
    void mul_tpoly(const TPoly& p, const Int& exponent);
    /// Multiply by other^exponent (merges factor maps and lambda ledger).
    void mul(const FactoredCharPoly& other, const Int& exponent);

    void finalize();

    Int total_degree() const;
    Rat eval(const Rat& lambda0) const;

    /// Semantic equality via a common coprime refinement of both factor bases.
    bool same_polynomial(const FactoredCharPoly& other) const;

    /// Expanded polynomial in t (lambda power excluded); guarded by max_degree.
    TPoly expanded_t_part(long max_degree = 4096) const;

    std::string to_string() const;  // factored form in lambda

  private:
    void add_key(TPoly p, Int e);

    int k_;
    Int lambda_exp_ = 0;
    std::map<TPoly, Int> factors_;
    int sign_ = 1;                                 // accumulated factor-sign parity
    std::vector<std::pair<Int, Int>> content_log_; // non-unit |content|^exponent entries
    bool finalized_ = false;
};

}  // namespace hcp
