#include "hcp/trat.hpp"

#include <stdexcept>

namespace hcp {

TRat::TRat(const TPoly& num, const TPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("TRat: zero denominator");
    reduce();
}

void TRat::reduce() {
    if (num_.is_zero()) {
        den_ = TPoly(Int(1));
        return;
    }
    TPoly g = TPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = TPoly::divexact(num_, g);
        den_ = TPoly::divexact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

TRat TRat::operator+(const TRat& o) const {
    return TRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

TRat TRat::operator-(const TRat& o) const {
    return TRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

TRat TRat::operator*(const TRat& o) const {
    return TRat(num_ * o.num_, den_ * o.den_);
}

TRat TRat::operator/(const TRat& o) const {
    if (o.is_zero()) throw std::domain_error("TRat: division by zero");
    return TRat(num_ * o.den_, den_ * o.num_);
}

TRat TRat::operator-() const {
    TRat out(*this);
    out.num_ = -out.num_;
    return out;
}

Rat TRat::eval(const Rat& t0) const {
    Rat d = den_.eval(t0);
    if (d == 0) throw std::domain_error("TRat::eval: pole at given point");
    return num_.eval(t0) / d;
}

std::string TRat::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace hcp
