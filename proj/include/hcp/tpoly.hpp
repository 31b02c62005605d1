#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "hcp/bigint.hpp"

namespace hcp {

/// Sparse univariate polynomial in t with exact integer coefficients.
/// Zero coefficients are never stored; the zero polynomial has an empty map.
class TPoly {
  public:
    TPoly() = default;
    explicit TPoly(const Int& constant);
    explicit TPoly(long constant);

    /// Coefficients listed from degree 0 upward.
    static TPoly from_coeffs(const std::vector<Int>& low_to_high);
    static TPoly t();                 // the monomial t
    static TPoly t_pow(int degree);   // t^degree

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int degree() const;               // -1 for the zero polynomial
    int low_degree() const;           // smallest degree with nonzero coefficient
    Int coeff(int degree) const;
    const Int& leading() const;
    const std::map<int, Int>& coeffs() const { return coeffs_; }

    TPoly operator-() const;
    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly operator*(const Int& c) const;
    bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }
    bool operator<(const TPoly& o) const { return compare(*this, o) < 0; }

    /// Total order: degree first, then coefficients from degree 0 upward.
    static int compare(const TPoly& a, const TPoly& b);

    Int content() const;              // nonnegative gcd of coefficients; 0 for zero
    TPoly primitive_part() const;
    /// Primitive with positive leading coefficient (canonical factor key).
    TPoly canonical() const;

    TPoly pow(unsigned long e) const;
    /// Quotient by t^j (requires low_degree() >= j).
    TPoly shift_down(int j) const;

    /// Exact division; throws std::domain_error if the division has a remainder
    /// or a non-integer quotient.
    static TPoly divexact(const TPoly& a, const TPoly& b);
    /// True divisibility test over Z[t]; quotient written to *q when non-null.
    static bool divides(const TPoly& b, const TPoly& a, TPoly* q = nullptr);
    /// gcd over Z[t], canonical (primitive*content convention: content gcd times
    /// primitive gcd, positive leading coefficient).
    static TPoly gcd(const TPoly& a, const TPoly& b);

    Rat eval(const Rat& t0) const;

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim();
    std::map<int, Int> coeffs_;
};

}  // namespace hcp
