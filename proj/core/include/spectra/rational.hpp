#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace spectra {

using Rat = mpq_class;
using Int = mpz_class;

/// Canonicalized rational from an integer pair.
inline Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Serialize as "num/den" ("num" when the denominator is 1).
inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

/// q^e with e possibly negative.
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat num, r;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(num.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    num.canonicalize();
    if (e < 0) {
        if (num == 0) throw std::domain_error("negative power of zero");
        r = 1 / num;
    } else {
        r = num;
    }
    return r;
}

inline Int int_pow(long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace spectra
