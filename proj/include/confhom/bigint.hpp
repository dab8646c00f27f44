#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace confhom {

// Exact arbitrary-precision integer. All arithmetic in the library is exact;
// no floating point appears anywhere.
using Int = mpz_class;

using IntVec = std::vector<Int>;

inline Int int_abs(const Int& a) { return abs(a); }

inline int int_sgn(const Int& a) { return sgn(a); }

// Quotient with balanced remainder: a = q*b + r with -|b|/2 < r <= |b|/2.
// Deterministic, used by the normal form elimination.
inline void balanced_div(const Int& a, const Int& b, Int& q, Int& r) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int ab = abs(b);
    int s = sgn(b) > 0 ? 1 : -1;
    if (r * 2 > ab) {
        r -= ab;
        q += s;
    } else if (r * 2 <= -ab) {
        r += ab;
        q -= s;
    }
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Canonical representative of a modulo m in [0, m); m > 0.
inline Int int_mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace confhom
