#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quadcong/arith.hpp"

using namespace quadcong;

TEST(Isqrt, Examples)
{
    EXPECT_EQ(isqrt(0), 0);
    EXPECT_EQ(isqrt(21), 4);
    EXPECT_EQ(isqrt(4353), 65);
    EXPECT_THROW(isqrt(-1), std::domain_error);
}

TEST(Isqrt, MatchesGmpOnWideRange)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        Int n = rng();
        n = n * rng() * rng() + rng() % 1000; // up to ~2^192
        Int r = isqrt(n);
        EXPECT_EQ(r, oracle::gmp_sqrt(n));
        EXPECT_LE(r * r, n);
        EXPECT_GT((r + 1) * (r + 1), n);
    }
    for (long n = 0; n < 5000; ++n)
        ASSERT_EQ(isqrt(n), oracle::gmp_sqrt(n)) << n;
}

TEST(Isqrt, HandlesLargeMagnitudes)
{
    Int big;
    mpz_ui_pow_ui(big.get_mpz_t(), 98539, 30); // far above 2^256
    EXPECT_EQ(isqrt(big * big), big);
    EXPECT_EQ(isqrt(big * big - 1), big - 1);
}

TEST(Jacobi, Examples)
{
    EXPECT_EQ(jacobi(1, 1), 1);
    EXPECT_EQ(jacobi(2, 15), 1);
    EXPECT_EQ(jacobi(-1, 7), -1);
    EXPECT_EQ(jacobi(3, 9), 0);
    EXPECT_THROW(jacobi(3, 8), std::domain_error);
    EXPECT_THROW(jacobi(3, -5), std::domain_error);
    EXPECT_THROW(jacobi(3, 0), std::domain_error);
}

TEST(Jacobi, MatchesGmp)
{
    for (long k = 1; k < 300; k += 2)
        for (long h = -300; h <= 300; ++h)
            ASSERT_EQ(jacobi(h, k), mpz_jacobi(Int(h).get_mpz_t(), Int(k).get_mpz_t()))
                << h << "/" << k;
}

TEST(Jacobi, Multiplicativity)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> hs(-100000, 100000), ks(0, 50000);
    for (int i = 0; i < 1000; ++i) {
        long h1 = hs(rng), h2 = hs(rng), k = 2 * ks(rng) + 1;
        EXPECT_EQ(jacobi(Int(h1) * h2, k), jacobi(h1, k) * jacobi(h2, k));
    }
}

TEST(Jacobi, Reciprocity)
{
    for (long h = 1; h < 200; h += 2) {
        for (long k = 1; k < 200; k += 2) {
            if (std::gcd(h, k) != 1)
                continue;
            int expected = ((h - 1) / 2 * ((k - 1) / 2)) % 2 ? -1 : 1;
            ASSERT_EQ(jacobi(h, k) * jacobi(k, h), expected);
        }
    }
}

TEST(Kronecker, Examples)
{
    EXPECT_EQ(kronecker(-3, 2), -1);
    EXPECT_EQ(kronecker(-11, 2), -1);
    EXPECT_EQ(kronecker(-7, 2), 1);
    EXPECT_EQ(kronecker(1, 0), 1);
    EXPECT_EQ(kronecker(-1, 0), 1);
    EXPECT_EQ(kronecker(5, 0), 0);
}

TEST(Kronecker, MatchesGmpAndJacobi)
{
    for (long d = -150; d <= 150; ++d) {
        for (long n = -150; n <= 150; ++n) {
            ASSERT_EQ(kronecker(d, n), oracle::gmp_kronecker(d, n)) << d << "," << n;
            if (n > 0 && n % 2)
                ASSERT_EQ(kronecker(d, n), jacobi(mod_floor(d, n), n));
        }
    }
}

TEST(Kronecker, TwoFormula)
{
    for (long m = -201; m <= 201; m += 2) {
        int expected = ((m * m - 1) / 8) % 2 ? -1 : 1;
        EXPECT_EQ(kronecker(m, 2), expected) << m;
    }
}

TEST(Chi, Examples)
{
    EXPECT_EQ(chi(-3, 1), 1);
    EXPECT_EQ(chi(-4, 3), -1);
    EXPECT_EQ(chi(-3, 2), -1);
    for (long a = 1; a < 50; a += 2)
        EXPECT_EQ(chi(-4, a), (a - 1) / 2 % 2 ? -1 : 1);
    EXPECT_THROW(chi(7, 3), std::domain_error);
    EXPECT_THROW(chi(-6, 3), std::domain_error);
}

TEST(Primality, Examples)
{
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(547));
    EXPECT_FALSE(is_prime(561));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
}

TEST(Primality, MatchesTrialDivision)
{
    for (std::int64_t n = 0; n < 20000; ++n)
        ASSERT_EQ(is_prime(n), oracle::trial_prime(n)) << n;
}

TEST(Primality, StrongPseudoprimesAndLargeValues)
{
    // strong pseudoprimes to several small bases
    for (std::uint64_t n : {3215031751ULL, 2152302898747ULL, 3474749660383ULL,
                            341550071728321ULL, 3825123056546413051ULL})
        EXPECT_FALSE(is_prime_u64(n)) << n;
    EXPECT_TRUE(is_prime_u64(18446744073709551557ULL)); // largest prime below 2^64
    Int two64;
    mpz_ui_pow_ui(two64.get_mpz_t(), 2, 64);
    EXPECT_THROW(is_prime(two64 + 13), std::out_of_range);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t n = rng() | 1;
        EXPECT_EQ(is_prime_u64(n), mpz_probab_prime_p(Int(std::to_string(n)).get_mpz_t(), 40) > 0)
            << n;
    }
}

TEST(Rational, StaysNormalized)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 1000; ++i) {
        Rational a = make_rational(num(rng), den(rng));
        Rational b = make_rational(num(rng), den(rng));
        std::vector<Rational> results{a + b, a - b, a * b};
        if (b != 0)
            results.push_back(a / b);
        for (auto const & r : results) {
            EXPECT_GT(r.get_den(), 0);
            Int g;
            mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
            EXPECT_EQ(g, 1);
        }
    }
    EXPECT_EQ(make_rational(6, -4), Rational(-3, 2));
    EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Helpers, FactorizeAndFloor)
{
    auto f = factorize(2 * 2 * 2 * 3 * 5 * 5);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], std::make_pair(Int(2), 3u));
    EXPECT_EQ(f[2], std::make_pair(Int(5), 2u));
    EXPECT_EQ(valuation(48, 2), 4u);
    EXPECT_EQ(floor_div(-7, 2), -4);
    EXPECT_EQ(mod_floor(-7, 3), 2);
    EXPECT_EQ(primes_up_to(30).size(), 10u);
}
