#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <string>

namespace orbifrob {

// Arbitrary-precision rational scalar. All exponents, weights and degrees in the
// workbench are exact rationals; there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline long rat_num(const Rat& r) { return mpz_get_si(r.get_num_mpz_t()); }
inline long rat_den(const Rat& r) { return mpz_get_si(r.get_den_mpz_t()); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// r mod 1, result in [0,1)
inline Rat mod1(const Rat& r) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Rat out = r - Rat(fl);
    out.canonicalize();
    return out;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace orbifrob
