#include "hcp/tpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hcp {

TPoly::TPoly(const Int& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

TPoly::TPoly(long constant) : TPoly(Int(constant)) {}

TPoly TPoly::from_coeffs(const std::vector<Int>& low_to_high) {
    TPoly p;
    for (size_t d = 0; d < low_to_high.size(); ++d) {
        if (low_to_high[d] != 0) p.coeffs_[static_cast<int>(d)] = low_to_high[d];
    }
    return p;
}

TPoly TPoly::t() { return t_pow(1); }

TPoly TPoly::t_pow(int degree) {
    TPoly p;
    p.coeffs_[degree] = 1;
    return p;
}

bool TPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int TPoly::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

int TPoly::low_degree() const {
    if (coeffs_.empty()) throw std::domain_error("low_degree of zero polynomial");
    return coeffs_.begin()->first;
}

Int TPoly::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Int(0) : it->second;
}

const Int& TPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.rbegin()->second;
}

void TPoly::trim() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0) {
            it = coeffs_.erase(it);
        } else {
            ++it;
        }
    }
}

TPoly TPoly::operator-() const {
    TPoly out(*this);
    for (auto& [d, c] : out.coeffs_) c = -c;
    return out;
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly out(*this);
    for (const auto& [d, c] : o.coeffs_) out.coeffs_[d] += c;
    out.trim();
    return out;
}

TPoly TPoly::operator-(const TPoly& o) const {
    TPoly out(*this);
    for (const auto& [d, c] : o.coeffs_) out.coeffs_[d] -= c;
    out.trim();
    return out;
}

TPoly TPoly::operator*(const TPoly& o) const {
    TPoly out;
    for (const auto& [da, ca] : coeffs_) {
        for (const auto& [db, cb] : o.coeffs_) {
            out.coeffs_[da + db] += ca * cb;
        }
    }
    out.trim();
    return out;
}

TPoly TPoly::operator*(const Int& c) const {
    if (c == 0) return TPoly();
    TPoly out(*this);
    for (auto& [d, v] : out.coeffs_) v *= c;
    return out;
}

int TPoly::compare(const TPoly& a, const TPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int d = 0; d <= a.degree(); ++d) {
        int c = cmp(a.coeff(d), b.coeff(d));
        if (c != 0) return c;
    }
    return 0;
}

Int TPoly::content() const {
    Int g = 0;
    for (const auto& [d, c] : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

TPoly TPoly::primitive_part() const {
    if (is_zero()) return TPoly();
    Int c = content();
    TPoly out;
    for (const auto& [d, v] : coeffs_) out.coeffs_[d] = v / c;
    return out;
}

TPoly TPoly::canonical() const {
    if (is_zero()) return TPoly();
    TPoly p = primitive_part();
    if (p.leading() < 0) p = -p;
    return p;
}

TPoly TPoly::pow(unsigned long e) const {
    TPoly out(Int(1));
    TPoly base(*this);
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

TPoly TPoly::shift_down(int j) const {
    if (j == 0) return *this;
    TPoly out;
    for (const auto& [d, c] : coeffs_) {
        if (d < j) throw std::domain_error("shift_down: polynomial not divisible by t^j");
        out.coeffs_[d - j] = c;
    }
    return out;
}

bool TPoly::divides(const TPoly& b, const TPoly& a, TPoly* q) {
    if (b.is_zero()) return a.is_zero();
    // Long division over Q, then require an integral exact quotient.
    std::map<int, Rat> rem;
    for (const auto& [d, c] : a.coeffs_) rem[d] = Rat(c);
    std::map<int, Rat> quot;
    const int db = b.degree();
    const Rat lb(b.leading());
    while (!rem.empty() && rem.rbegin()->first >= db) {
        int d = rem.rbegin()->first;
        Rat c = rem.rbegin()->second / lb;
        quot[d - db] = c;
        for (const auto& [bd, bc] : b.coeffs_) {
            Rat& slot = rem[bd + d - db];
            slot -= c * Rat(bc);
            if (slot == 0) rem.erase(bd + d - db);
        }
    }
    if (!rem.empty()) return false;
    TPoly out;
    for (const auto& [d, c] : quot) {
        if (c == 0) continue;
        if (c.get_den() != 1) return false;
        out.coeffs_[d] = c.get_num();
    }
    if (q) *q = out;
    return true;
}

TPoly TPoly::divexact(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw std::domain_error("divexact by zero");
    TPoly q;
    if (!divides(b, a, &q)) throw std::domain_error("divexact: not exactly divisible");
    return q;
}

TPoly TPoly::gcd(const TPoly& a, const TPoly& b) {
    if (a.is_zero()) return b.canonical() * b.content();
    if (b.is_zero()) return a.canonical() * a.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    // Primitive PRS; degrees stay tiny here.
    TPoly u = a.canonical();
    TPoly v = b.canonical();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        // Pseudo-remainder of u by v.
        TPoly r = u;
        const int dv = v.degree();
        const Int lv = v.leading();
        while (!r.is_zero() && r.degree() >= dv) {
            int d = r.degree();
            Int lc = r.leading();
            // r := lv*r - lc*t^(d-dv)*v  kills the degree-d term.
            r = r * lv - (v * lc) * TPoly::t_pow(d - dv);
        }
        u = v;
        v = r.canonical();
    }
    return u.canonical() * cg;
}

Rat TPoly::eval(const Rat& t0) const {
    // Horner over the sparse representation.
    Rat acc = 0;
    int prev = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev >= 0) acc = acc * rat_pow(t0, Int(prev - it->first));
        acc += Rat(it->second);
        prev = it->first;
    }
    if (prev > 0) acc = acc * rat_pow(t0, Int(prev));
    return acc;
}

std::string TPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [d, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int mag = abs(c);
        if (mag != 1 || d == 0) os << mag.get_str();
        if (d >= 1) {
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

}  // namespace hcp
