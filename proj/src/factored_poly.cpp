#include "hcp/factored_poly.hpp"

#include <sstream>

namespace hcp {

namespace {

bool exponent_is_odd(const Int& e) { return mpz_odd_p(e.get_mpz_t()) != 0; }

// lambda-expanded rendering of a single t-factor: degrees multiply by k.
std::string factor_in_lambda(const TPoly& f, int k) {
    std::ostringstream os;
    bool first = true;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        const auto& [d, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int mag = abs(c);
        int lam_deg = d * k;
        if (mag != 1 || lam_deg == 0) os << mag.get_str();
        if (lam_deg >= 1) {
            os << u8"λ";
            if (lam_deg > 1) os << "^" << lam_deg;
        }
    }
    return os.str();
}

}  // namespace

FactoredCharPoly::FactoredCharPoly(int k) : k_(k) {
    if (k < 2) throw std::invalid_argument("FactoredCharPoly: k must be >= 2");
}

void FactoredCharPoly::mul_lambda_power(const Int& e) {
    if (finalized_) throw std::logic_error("FactoredCharPoly: mutation after finalize");
    lambda_exp_ += e;
}

void FactoredCharPoly::mul_factor(const TRat& factor, const Int& exponent, const Int& lambda_shift) {
    if (factor.is_zero()) throw std::invalid_argument("mul_factor: zero factor");
    mul_lambda_power(lambda_shift * exponent);
    mul_tpoly(factor.num(), exponent);
    mul_tpoly(factor.den(), -exponent);
}

void FactoredCharPoly::mul_tpoly(const TPoly& p, const Int& exponent) {
    if (finalized_) throw std::logic_error("FactoredCharPoly: mutation after finalize");
    if (p.is_zero()) throw std::invalid_argument("mul_tpoly: zero polynomial");
    if (exponent == 0) return;
    TPoly q = p;
    int low = q.low_degree();
    if (low > 0) {
        q = q.shift_down(low);
        lambda_exp_ += Int(k_) * low * exponent;
    }
    if (q.leading() < 0) {
        q = -q;
        if (exponent_is_odd(exponent)) sign_ = -sign_;
    }
    Int c = q.content();
    if (c != 1) {
        content_log_.emplace_back(c, exponent);
        q = q.primitive_part();
    }
    if (q.is_one()) return;
    add_key(std::move(q), exponent);
}

void FactoredCharPoly::mul(const FactoredCharPoly& other, const Int& exponent) {
    if (finalized_) throw std::logic_error("FactoredCharPoly: mutation after finalize");
    if (other.k_ != k_) throw std::invalid_argument("mul: mismatched k");
    if (exponent == 0) return;
    lambda_exp_ += other.lambda_exp_ * exponent;
    if (other.sign_ < 0 && exponent_is_odd(exponent)) sign_ = -sign_;
    for (const auto& [c, e] : other.content_log_) content_log_.emplace_back(c, e * exponent);
    for (const auto& [f, e] : other.factors_) add_key(f, e * exponent);
}

void FactoredCharPoly::add_key(TPoly p, Int e) {
    // Keep the key set pairwise coprime: split keys along gcds so that exponent
    // arithmetic (including transient negatives) cancels exactly.
    std::vector<std::pair<TPoly, Int>> work;
    work.emplace_back(std::move(p), std::move(e));
    while (!work.empty()) {
        auto [f, fe] = std::move(work.back());
        work.pop_back();
        if (f.degree() <= 0) continue;  // units were stripped by mul_tpoly

        auto exact = factors_.find(f);
        if (exact != factors_.end()) {
            exact->second += fe;
            continue;
        }

        bool split = false;
        for (auto it = factors_.begin(); it != factors_.end(); ++it) {
            TPoly g = TPoly::gcd(f, it->first);
            if (g.degree() <= 0) continue;

            TPoly q = it->first;
            Int qe = it->second;
            factors_.erase(it);

            Int a = 0;
            TPoly tmp;
            while (TPoly::divides(g, q, &tmp)) {
                q = tmp;
                a += 1;
                if (q.degree() == 0) break;
            }
            Int b = 0;
            while (TPoly::divides(g, f, &tmp)) {
                f = tmp;
                b += 1;
                if (f.degree() == 0) break;
            }
            work.emplace_back(g, a * qe + b * fe);
            if (q.degree() > 0) work.emplace_back(q, qe);
            if (f.degree() > 0) work.emplace_back(f, fe);
            split = true;
            break;
        }
        if (!split) factors_.emplace(std::move(f), std::move(fe));
    }
}

void FactoredCharPoly::finalize() {
    if (finalized_) return;
    for (const auto& [c, e] : content_log_) {
        if (c != 1 && c != -1 && e != 0) {
            throw NotPolynomialError("non-unit content " + c.get_str() + "^" + e.get_str() +
                                     " left after assembly");
        }
    }
    content_log_.clear();
    if (sign_ != 1) throw NotPolynomialError("assembled product has negative sign");
    for (auto it = factors_.begin(); it != factors_.end();) {
        if (it->second == 0) {
            it = factors_.erase(it);
        } else if (it->second < 0) {
            throw NotPolynomialError("factor (" + it->first.to_string() +
                                     ") keeps negative exponent " + it->second.get_str());
        } else {
            ++it;
        }
    }
    if (lambda_exp_ < 0) {
        throw NotPolynomialError("negative lambda exponent " + lambda_exp_.get_str());
    }
    finalized_ = true;
}

Int FactoredCharPoly::total_degree() const {
    if (!finalized_) throw std::logic_error("total_degree: not finalized");
    Int deg = lambda_exp_;
    for (const auto& [f, e] : factors_) deg += Int(k_) * f.degree() * e;
    return deg;
}

Rat FactoredCharPoly::eval(const Rat& lambda0) const {
    if (!finalized_) throw std::logic_error("eval: not finalized");
    Rat t0 = rat_pow(lambda0, Int(k_));
    Rat out = rat_pow(lambda0, lambda_exp_);
    for (const auto& [f, e] : factors_) {
        Rat v = f.eval(t0);
        if (v == 0) return Rat(0);
        out *= rat_pow(v, e);
    }
    return out;
}

bool FactoredCharPoly::same_polynomial(const FactoredCharPoly& other) const {
    if (k_ != other.k_ || lambda_exp_ != other.lambda_exp_) return false;
    // Refine each side's basis against the other's keys, then compare.
    FactoredCharPoly a(*this), b(other);
    a.finalized_ = b.finalized_ = false;
    for (const auto& [f, e] : other.factors_) a.add_key(f, 0);
    for (const auto& [f, e] : factors_) b.add_key(f, 0);
    auto nonzero = [](const std::map<TPoly, Int>& m) {
        std::map<TPoly, Int> out;
        for (const auto& [f, e] : m) {
            if (e != 0) out.emplace(f, e);
        }
        return out;
    };
    return nonzero(a.factors_) == nonzero(b.factors_);
}

TPoly FactoredCharPoly::expanded_t_part(long max_degree) const {
    if (!finalized_) throw std::logic_error("expanded_t_part: not finalized");
    Int deg = 0;
    for (const auto& [f, e] : factors_) deg += Int(f.degree()) * e;
    if (deg > max_degree) throw std::overflow_error("expanded_t_part: degree guard exceeded");
    TPoly out(Int(1));
    for (const auto& [f, e] : factors_) out = out * f.pow(to_ulong_checked(e, "expanded_t_part"));
    return out;
}

std::string FactoredCharPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (lambda_exp_ != 0 || factors_.empty()) {
        os << u8"λ";
        if (lambda_exp_ != 1) os << "^" << lambda_exp_.get_str();
        first = false;
    }
    for (const auto& [f, e] : factors_) {
        if (!first) os << u8" · ";
        first = false;
        os << "(" << factor_in_lambda(f, k_) << ")";
        if (e != 1) os << "^" << e.get_str();
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace hcp
