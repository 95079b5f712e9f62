#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symchar {

// Exact arithmetic used everywhere in the library. No floating point enters
// any computation that feeds an exact result; doubles appear only in Monte
// Carlo summary statistics.
using BigInt = mpz_class;
using Rational = mpq_class;

// Raised when textual input (partition, cycle notation, ...) is malformed.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when arguments violate an operation's domain contract.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal cross-check fails (two routes disagree, an
// integrality assertion breaks). Indicates a bug, never bad user input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& n) { return n.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// n (n-1) ... (n-k+1); zero as soon as k exceeds n for nonnegative n.
inline BigInt falling_factorial(long n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= BigInt(n - static_cast<long>(i));
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace symchar
