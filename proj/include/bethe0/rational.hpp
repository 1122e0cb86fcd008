// Exact arithmetic substrate: arbitrary-precision integers and rationals.
// All arithmetic in this library is exact; no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bethe0 {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt factorial(long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

/// Generalized binomial coefficient with integer top argument:
/// xi*(xi-1)*...*(xi-n+1)/n! for n >= 1, 1 for n == 0, 0 for n < 0.
/// Always an exact integer when xi is an integer.
inline BigInt binom_gen(const BigInt& xi, long n) {
    if (n < 0) return BigInt(0);
    if (n == 0) return BigInt(1);
    BigInt num(1);
    for (long i = 0; i < n; ++i) num *= xi - i;
    BigInt r;
    BigInt fac = factorial(n);
    // product of n consecutive integers is divisible by n!
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), fac.get_mpz_t());
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_integer(const BigRat& r) { return r.get_den() == 1; }

/// Representative of r mod 1 in [0,1), as a reduced rational.
inline BigRat torus_reduce(const BigRat& r) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    BigRat out = r - BigRat(fl);
    out.canonicalize();
    return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Canonical form: "p/q" for non-integers, plain decimal otherwise.
inline std::string to_string(const BigRat& v) { return v.get_str(); }

}  // namespace bethe0
