// Independent reference implementations used only by the tests.  Each one
// takes a different route from the library code it checks.
#ifndef QUADCONG_TEST_ORACLES_HPP
#define QUADCONG_TEST_ORACLES_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Int = mpz_class;
using Rational = mpq_class;

inline Int gmp_sqrt(Int const & n)
{
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline int gmp_kronecker(Int const & a, Int const & b)
{
    return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

inline bool trial_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

// Continued fraction of (P + sqrt(D)) / Q via the PQa recurrence; the period
// starts at the first repeated (P, Q) state.
struct Expansion {
    std::vector<Int> pre, period;
};

inline Expansion pqa(Int P, Int Q, Int const & D)
{
    Int r = gmp_sqrt(D);
    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::vector<Int> q;
    auto cmp_key = [&](Int const & p, Int const & qq) { return std::make_pair(p, qq); };
    while (!seen.count(cmp_key(P, Q))) {
        seen[cmp_key(P, Q)] = q.size();
        Int a;
        if (Q > 0) {
            mpz_fdiv_q(a.get_mpz_t(), Int(P + r).get_mpz_t(), Q.get_mpz_t());
        } else {
            Int negQ = -Q;
            mpz_fdiv_q(a.get_mpz_t(), Int(P + r).get_mpz_t(), negQ.get_mpz_t());
            a = -a - 1;
        }
        q.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    std::size_t start = seen[cmp_key(P, Q)];
    Expansion e;
    e.pre.assign(q.begin(), q.begin() + static_cast<long>(start));
    e.period.assign(q.begin() + static_cast<long>(start), q.end());
    return e;
}

inline Int alternating_sum(Expansion const & e)
{
    if (e.period.size() % 2)
        return 0;
    Int s = 0;
    for (std::size_t i = 0; i < e.period.size(); ++i)
        s += ((e.pre.size() + i) % 2 ? -1 : 1) * e.period[i];
    return s;
}

// Psi of (b + sqrt(delta)) / (2a).
inline Int psi(Int const & a, Int const & b, Int const & delta)
{
    return alternating_sum(pqa(b, 2 * a, delta));
}

// Dirichlet's formula h(d) = -(w / 2|d|) sum_{a=1}^{|d|} chi_d(a) a, fundamental d < 0.
inline long class_number_dirichlet(long d)
{
    long n = -d;
    long w = d == -3 ? 6 : d == -4 ? 4 : 2;
    long s = 0;
    for (long a = 1; a < n; ++a)
        s += gmp_kronecker(Int(d), Int(a)) * a;
    return -w * s / (2 * n);
}

inline bool squarefree(long n)
{
    n = n < 0 ? -n : n;
    for (long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

inline bool fundamental(long d)
{
    long m = ((d % 4) + 4) % 4;
    if (m == 1)
        return d != 1 && squarefree(d);
    if (m != 0)
        return false;
    long q = d / 4;
    long qm = ((q % 4) + 4) % 4;
    return (qm == 2 || qm == 3) && squarefree(q);
}

// Narrow class number of an indefinite discriminant: Gauss-reduced forms
// (sqrt(D) - 2|a| < b < sqrt(D), |sqrt(D) - 2|a|| < b) grouped into rho cycles.
inline long narrow_class_number(long D)
{
    long r = static_cast<long>(gmp_sqrt(Int(D)).get_si());
    auto reduced = [&](long a, long b) {
        long A = a < 0 ? -a : a;
        if (b <= 0 || b > r)
            return false;
        bool lower = (2 * A + b) * (2 * A + b) > D;
        bool upper = 2 * A - b <= 0 || (2 * A - b) * (2 * A - b) < D;
        return lower && upper;
    };
    std::set<std::pair<long, long>> forms;
    for (long b = 1; b <= r; ++b) {
        if ((b - D) % 2)
            continue;
        long ac = (b * b - D) / 4; // negative
        for (long a = 1; a * a <= -ac; ++a) {
            if (ac % a)
                continue;
            for (long s : {a, -ac / a}) {
                for (long sign : {1, -1}) {
                    long aa = sign * s;
                    long cc = ac / aa;
                    if (std::gcd(std::gcd(aa, b), cc) != 1)
                        continue;
                    if (reduced(aa, b))
                        forms.insert({aa, b});
                }
            }
        }
    }
    std::set<std::pair<long, long>> visited;
    long cycles = 0;
    for (auto const & start : forms) {
        if (visited.count(start))
            continue;
        ++cycles;
        auto cur = start;
        while (!visited.count(cur)) {
            visited.insert(cur);
            auto [a, b] = cur;
            long c = (b * b - D) / (4 * a);
            long m = 2 * (c < 0 ? -c : c);
            // largest b' <= r with b' = -b mod 2|c|
            long nb = r - ((((r + b) % m) + m) % m);
            cur = {c, nb};
        }
    }
    return cycles;
}

// Smallest u >= 1 with D u^2 +- 4 a perfect square, searching u < limit.
struct PellSolution {
    Int t, u;
    int norm;
};

inline std::optional<PellSolution> brute_unit(long D, long limit)
{
    for (long u = 1; u < limit; ++u) {
        Int base = Int(D) * u * u;
        for (int norm : {-1, 1}) {
            Int t2 = base + 4 * norm;
            if (t2 <= 0)
                continue;
            Int t = gmp_sqrt(t2);
            if (t * t == t2)
                return PellSolution{t, Int(u), norm};
        }
    }
    return std::nullopt;
}

// s(h, k) from the definition, summed over the integer numerators
// (2k frac - k) of the sawtooth values.
inline Rational dedekind_definition(long h, long k)
{
    auto saw2k = [k](long num) -> long { // 2k * ((num / k))
        long r = ((num % k) + k) % k;
        return r == 0 ? 0 : 2 * r - k;
    };
    Int total = 0;
    for (long m = 1; m < k; ++m)
        total += Int(saw2k(m)) * saw2k(h * m);
    Rational s(total, Int(4) * k * k);
    s.canonicalize();
    return s;
}

// chi_{d1}(m) for a value m = F(x, y) of the form prime to d1.
inline int genus_by_values(long d1, Int const & a, Int const & b, Int const & c)
{
    for (long bound = 1; bound < 50; ++bound) {
        for (long x = -bound; x <= bound; ++x) {
            for (long y = -bound; y <= bound; ++y) {
                Int m = a * x * x + b * x * y + c * y * y;
                if (m == 0)
                    continue;
                Int g;
                mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), Int(d1).get_mpz_t());
                if (g == 1)
                    return gmp_kronecker(Int(d1), m);
            }
        }
    }
    return 0;
}

// Product of 2x2 generator matrices S = [[0,-1],[1,0]], T^e = [[1,e],[0,1]].
struct M2 {
    Int x, y, z, w;
};

inline M2 mul(M2 const & l, M2 const & r)
{
    return {l.x * r.x + l.y * r.z, l.x * r.y + l.y * r.w, l.z * r.x + l.w * r.z,
            l.z * r.y + l.w * r.w};
}

inline M2 random_word(std::mt19937_64 & rng, int length)
{
    M2 m{1, 0, 0, 1};
    std::uniform_int_distribution<int> e(-4, 4);
    for (int i = 0; i < length; ++i) {
        m = mul(m, M2{1, e(rng), 0, 1});
        m = mul(m, M2{0, -1, 1, 0});
    }
    return m;
}

} // namespace oracle

#endif
