#include "quadcong/arith.hpp"

#include <stdexcept>

namespace quadcong {

Rational make_rational(Int const & num, Int const & den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Int isqrt(Int const & n)
{
    if (n < 0)
        throw std::domain_error("isqrt: negative argument " + n.get_str());
    if (n < 2)
        return n;
    // Start above the root; Newton then decreases monotonically onto it.
    Int x = 1;
    x <<= (mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2;
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x)
            return x;
        x = y;
    }
}

bool is_square(Int const & n)
{
    if (n < 0)
        return false;
    Int r = isqrt(n);
    return r * r == n;
}

int jacobi(Int const & h, Int const & k)
{
    if (k < 1 || mpz_even_p(k.get_mpz_t()))
        throw std::domain_error("jacobi: modulus must be odd and positive, got "
                                + k.get_str());
    Int a = mod_floor(h, k);
    Int n = k;
    int t = 1;
    while (a != 0) {
        mp_bitcnt_t twos = mpz_scan1(a.get_mpz_t(), 0);
        if (twos > 0) {
            mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
            unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if ((twos & 1) && (r == 3 || r == 5))
                t = -t;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
            t = -t;
        a = mod_floor(a, n);
    }
    return n == 1 ? t : 0;
}

int kronecker(Int const & d, Int const & n)
{
    if (n == 0)
        return (d == 1 || d == -1) ? 1 : 0;
    int result = 1;
    Int m = n;
    if (m < 0) {
        m = -m;
        if (d < 0)
            result = -1;
    }
    mp_bitcnt_t twos = mpz_scan1(m.get_mpz_t(), 0);
    if (twos > 0) {
        if (mpz_even_p(d.get_mpz_t()))
            return 0;
        unsigned long r = mpz_fdiv_ui(d.get_mpz_t(), 8);
        if ((twos & 1) && (r == 3 || r == 5))
            result = -result;
        mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), twos);
    }
    return result * jacobi(d, m);
}

int chi(Int const & d, Int const & n)
{
    unsigned long r = mpz_fdiv_ui(d.get_mpz_t(), 4);
    if (r != 0 && r != 1)
        throw std::domain_error("chi: " + d.get_str() + " is not 0 or 1 mod 4");
    return kronecker(d, n);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : small) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a proven witness set for all n < 2^64.
    for (auto a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

bool is_prime(Int const & n)
{
    if (n < 0)
        throw std::domain_error("is_prime: negative argument");
    if (!mpz_fits_ulong_p(n.get_mpz_t()) || sizeof(unsigned long) < 8)
        throw std::out_of_range("is_prime: argument above 2^64");
    return is_prime_u64(n.get_ui());
}

std::vector<std::pair<Int, unsigned>> factorize(Int const & n)
{
    if (n == 0)
        throw std::domain_error("factorize: zero");
    std::vector<std::pair<Int, unsigned>> out;
    Int m = abs(n);
    auto strip = [&](Int const & p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    };
    strip(2);
    for (Int p = 3; p * p <= m; p += 2)
        strip(p);
    if (m > 1)
        out.emplace_back(m, 1);
    return out;
}

unsigned valuation(Int const & n, Int const & p)
{
    if (n == 0)
        throw std::domain_error("valuation of zero");
    unsigned e = 0;
    Int m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++e;
    }
    return e;
}

Int floor_div(Int const & n, Int const & d)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Int mod_floor(Int const & n, Int const & d)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

int sign(Int const & n)
{
    return sgn(n);
}

std::int64_t to_i64(Int const & n)
{
    if (!n.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
    return n.get_si();
}

std::string to_string(Int const & n)
{
    return n.get_str();
}

std::string to_string(Rational const & q)
{
    return q.get_str();
}

} // namespace quadcong
