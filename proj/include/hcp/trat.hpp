#pragma once

#include <string>

#include "hcp/tpoly.hpp"

namespace hcp {

/// Reduced ratio of integer t-polynomials: gcd(num, den) = 1 (including integer
/// content) and the denominator has a positive leading coefficient.
class TRat {
  public:
    TRat() : num_(), den_(Int(1)) {}
    explicit TRat(const TPoly& p) : num_(p), den_(Int(1)) {}
    explicit TRat(long c) : num_(Int(c)), den_(Int(1)) {}
    TRat(const TPoly& num, const TPoly& den);

    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    TRat operator+(const TRat& o) const;
    TRat operator-(const TRat& o) const;
    TRat operator*(const TRat& o) const;
    TRat operator/(const TRat& o) const;
    TRat operator-() const;
    bool operator==(const TRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const TRat& o) const { return !(*this == o); }

    Rat eval(const Rat& t0) const;
    std::string to_string(const std::string& var = "t") const;

  private:
    void reduce();
    TPoly num_;
    TPoly den_;
};

/// trat_reduce in the spec's vocabulary: build the reduced, sign-canonical ratio.
inline TRat trat_reduce(const TPoly& num, const TPoly& den) { return TRat(num, den); }

}  // namespace hcp
