#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hcp {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Int int_pow(long base, unsigned long e) {
    return int_pow(Int(base), e);
}

// Guarded conversion for exponents that end up in mpz_pow_ui / loops.
inline unsigned long to_ulong_checked(const Int& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) {
        throw std::overflow_error(std::string(what) + ": exponent out of range: " + v.get_str());
    }
    return v.get_ui();
}

// base^e for possibly negative exponent; base must be nonzero when e < 0.
inline Rat rat_pow(const Rat& base, const Int& e) {
    if (e >= 0) {
        unsigned long ue = to_ulong_checked(e, "rat_pow");
        Rat out;
        mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), ue);
        mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), ue);
        out.canonicalize();
        return out;
    }
    if (base == 0) throw std::domain_error("rat_pow: 0 raised to negative power");
    return rat_pow(Rat(1) / base, -e);
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// Accepts "p", "-p" and "p/q".
inline Rat parse_rational(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace hcp
