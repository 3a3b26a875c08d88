#ifndef QUADCONG_ARITH_HPP
#define QUADCONG_ARITH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace quadcong {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Exact rational; GMP keeps every result canonical (den > 0, gcd 1).
using Rational = mpq_class;

Rational make_rational(Int const & num, Int const & den);

/// Largest r with r^2 <= n.  Throws std::domain_error for n < 0.
Int isqrt(Int const & n);

bool is_square(Int const & n);

/// Jacobi symbol (h/k) for odd k >= 1.
int jacobi(Int const & h, Int const & k);

/// Kronecker symbol (d/n), defined for every pair of integers.
/// kronecker(d, 0) is 1 for d = +-1 and 0 otherwise.
int kronecker(Int const & d, Int const & n);

/// Quadratic character chi_d(n) = (d/n) of a discriminant d = 0,1 (mod 4).
int chi(Int const & d, Int const & n);

/// Deterministic Miller-Rabin; exact for every n < 2^64.
/// Throws std::out_of_range above that.
bool is_prime(Int const & n);
bool is_prime_u64(std::uint64_t n);

/// Trial-division factorization of |n| as (prime, exponent) pairs, ascending.
std::vector<std::pair<Int, unsigned>> factorize(Int const & n);

/// Exponent of p in n (n != 0).
unsigned valuation(Int const & n, Int const & p);

/// Floor division and the matching non-negative remainder for d > 0.
Int floor_div(Int const & n, Int const & d);
Int mod_floor(Int const & n, Int const & d);

/// Primes p <= bound, ascending (sieve).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

int sign(Int const & n);

std::int64_t to_i64(Int const & n);

std::string to_string(Int const & n);
std::string to_string(Rational const & q);

} // namespace quadcong

#endif
