#include "quadcong/quadratic.hpp"

#include <cassert>
#include <stdexcept>

namespace quadcong {

namespace {

bool is_squarefree(Int const & n)
{
    for (auto const & [p, e] : factorize(n)) {
        if (e > 1)
            return false;
    }
    return true;
}

unsigned long mod4(Int const & n)
{
    return mpz_fdiv_ui(n.get_mpz_t(), 4);
}

// Sign of x + s*sqrt(delta) for s = +-1 and non-square delta > 0.
int sign_with_root(Int const & x, int s, Int const & delta)
{
    if (s > 0)
        return (x >= 0 || x * x < delta) ? 1 : -1;
    return (x <= 0 || x * x < delta) ? -1 : 1;
}

// Sign of (p + s*sqrt(delta)) / q - n.
int compare(Int const & p, int s, Int const & q, Int const & n, Int const & delta)
{
    return sign_with_root(p - n * q, s, delta) * sgn(q);
}

void require_positive(Discriminant const & disc, char const * what)
{
    if (disc.delta <= 0)
        throw std::domain_error(std::string(what) + ": requires a positive discriminant, got "
                                + disc.delta.get_str());
}

} // namespace

bool is_fundamental(Int const & d)
{
    if (d == 0 || d == 1)
        return false;
    auto r = mod4(d);
    if (r == 1)
        return is_squarefree(d);
    if (r != 0)
        return false;
    Int m = d / 4;
    auto rm = mod4(m);
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

Discriminant make_discriminant(Int const & delta)
{
    auto r = mod4(delta);
    if (r != 0 && r != 1)
        throw std::invalid_argument("discriminant " + delta.get_str()
                                    + " is not congruent to 0 or 1 mod 4");
    if (abs(delta) <= 1)
        throw std::invalid_argument("discriminant must satisfy |delta| > 1, got "
                                    + delta.get_str());
    if (is_square(delta))
        throw std::invalid_argument("discriminant " + delta.get_str() + " is a perfect square");

    Int square_part = 1;
    Int core = 1;
    for (auto const & [p, e] : factorize(delta)) {
        for (unsigned i = 0; i < e / 2; ++i)
            square_part *= p;
        if (e % 2)
            core *= p;
    }
    if (delta < 0)
        core = -core;

    Discriminant disc;
    disc.delta = delta;
    if (mod4(core) == 1) {
        disc.d = core;
        disc.f = square_part;
    } else {
        disc.d = 4 * core;
        disc.f = square_part / 2;
    }
    disc.sigma = mpz_odd_p(delta.get_mpz_t()) ? 1 : 0;
    disc.root = delta > 0 ? isqrt(delta) : Int(0);
    return disc;
}

QuadraticIrrational::QuadraticIrrational(Int a, Int b, Discriminant disc)
    : a_(std::move(a)), b_(std::move(b)), disc_(std::move(disc))
{
    if (a_ == 0)
        throw std::invalid_argument("quadratic irrational needs a != 0");
    Int num = b_ * b_ - disc_.delta;
    Int den = 4 * a_;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::invalid_argument("(b^2 - delta) / 4a is not an integer for a=" + a_.get_str()
                                    + ", b=" + b_.get_str());
    c_ = num / den;
    Int g = gcd(gcd(a_, b_), c_);
    if (g != 1)
        throw std::invalid_argument("quadratic irrational is not primitive: gcd(a,b,c)="
                                    + g.get_str());
}

QuadraticIrrational omega(Discriminant const & disc)
{
    return QuadraticIrrational(1, disc.sigma, disc);
}

Int floor_of(QuadraticIrrational const & xi)
{
    auto const & disc = xi.disc();
    require_positive(disc, "floor");
    if (xi.a() > 0)
        return floor_div(xi.b() + disc.root, 2 * xi.a());
    return floor_div(-xi.b() - disc.root - 1, -2 * xi.a());
}

CfStep cf_step(QuadraticIrrational const & xi)
{
    Int n = floor_of(xi);
    Int const & a = xi.a();
    Int shifted_b = xi.b() - 2 * a * n;
    Int shifted_c = xi.c() - xi.b() * n + a * n * n;
    // 1/(xi - n) has coefficients (-c', -b', -a): a signed permutation of a
    // primitive triple, hence primitive.
    QuadraticIrrational next(-shifted_c, -shifted_b, -a, xi.disc());
    assert(gcd(gcd(next.a(), next.b()), next.c()) == 1);
    return CfStep{std::move(n), std::move(next)};
}

bool is_reduced(QuadraticIrrational const & xi)
{
    auto const & disc = xi.disc();
    require_positive(disc, "is_reduced");
    Int q = 2 * xi.a();
    return compare(xi.b(), 1, q, 1, disc.delta) > 0 && compare(xi.b(), -1, q, 0, disc.delta) < 0
           && compare(xi.b(), -1, q, -1, disc.delta) > 0;
}

QuadraticIrrational op_partner(QuadraticIrrational const & xi)
{
    Int n = floor_of(xi);
    return QuadraticIrrational(xi.a(), 2 * xi.a() * n - xi.b(), xi.disc());
}

CFExpansion cf_expand(QuadraticIrrational const & xi)
{
    require_positive(xi.disc(), "cf_expand");
    CFExpansion cf;
    QuadraticIrrational cur = xi;
    while (!is_reduced(cur)) {
        auto step = cf_step(cur);
        cf.preperiod.push_back(std::move(step.floor));
        cur = std::move(step.next);
    }
    QuadraticIrrational const start = cur;
    do {
        auto step = cf_step(cur);
        cf.period.push_back(std::move(step.floor));
        cur = std::move(step.next);
    } while (!(cur == start));
    return cf;
}

Int hirzebruch_sum(CFExpansion const & cf)
{
    if (cf.l() % 2)
        return 0;
    Int sum = 0;
    for (std::size_t i = 0; i < cf.l(); ++i) {
        if ((cf.k() + i) % 2)
            sum -= cf.period[i];
        else
            sum += cf.period[i];
    }
    return sum;
}

UnitCoeffs make_unit(Discriminant const & disc, Int t, Int u)
{
    Int four_norm = t * t - disc.delta * u * u;
    if (four_norm != 4 && four_norm != -4)
        throw std::invalid_argument("(" + t.get_str() + " + " + u.get_str()
                                    + " sqrt(delta))/2 is not a unit");
    UnitCoeffs e;
    e.q = (t - disc.sigma * u) / 2;
    e.r = u;
    e.t = std::move(t);
    e.u = std::move(u);
    e.norm = four_norm > 0 ? 1 : -1;
    return e;
}

UnitCoeffs unit_from_cycle(QuadraticIrrational const & reduced)
{
    if (!is_reduced(reduced))
        throw std::invalid_argument("unit_from_cycle: irrational is not reduced");
    // Columns (p_n, q_n), (p_{n-1}, q_{n-1}) of the convergent matrix.
    Int p = 1, q = 0, p_prev = 0, q_prev = 1;
    QuadraticIrrational cur = reduced;
    std::size_t length = 0;
    do {
        auto step = cf_step(cur);
        Int np = step.floor * p + p_prev;
        Int nq = step.floor * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(np);
        q = std::move(nq);
        cur = std::move(step.next);
        ++length;
    } while (!(cur == reduced));

    // reduced = (p x + p') / (q x + q') with x = reduced, so q*x + q' is a
    // unit of norm det = (-1)^length.
    Int const & a = reduced.a();
    Int t_num = q * reduced.b() + 2 * a * q_prev;
    if (!mpz_divisible_p(q.get_mpz_t(), a.get_mpz_t())
        || !mpz_divisible_p(t_num.get_mpz_t(), a.get_mpz_t()))
        throw std::logic_error("unit_from_cycle: non-integral unit coefficients");
    auto e = make_unit(reduced.disc(), t_num / a, q / a);
    assert(e.norm == ((length % 2) ? -1 : 1));
    return e;
}

std::pair<Int, Int> unit_power(Int const & delta, Int const & t, Int const & u, unsigned n)
{
    Int big_t = 2, big_u = 0;
    for (unsigned i = 0; i < n; ++i) {
        Int nt = (big_t * t + delta * big_u * u) / 2;
        Int nu = (big_t * u + t * big_u) / 2;
        big_t = std::move(nt);
        big_u = std::move(nu);
    }
    return {big_t, big_u};
}

namespace {

QuadraticIrrational first_reduced_tail(QuadraticIrrational xi)
{
    while (!is_reduced(xi))
        xi = cf_step(xi).next;
    return xi;
}

} // namespace

namespace {

struct ConductorPower {
    Int t;
    Int u;
    unsigned exponent;
};

// Least power of the unit (t + u sqrt(d))/2 whose sqrt(d)-coefficient is
// divisible by f.
ConductorPower least_power_in_order(UnitCoeffs const & base, Int const & d, Int const & f)
{
    ConductorPower out{base.t, base.u, 1};
    while (!mpz_divisible_p(out.u.get_mpz_t(), f.get_mpz_t())) {
        Int nt = (out.t * base.t + d * out.u * base.u) / 2;
        Int nu = (out.t * base.u + base.t * out.u) / 2;
        out.t = std::move(nt);
        out.u = std::move(nu);
        ++out.exponent;
    }
    return out;
}

} // namespace

UnitCoeffs fundamental_unit(Discriminant const & disc)
{
    require_positive(disc, "fundamental_unit");
    if (disc.f == 1)
        return unit_from_cycle(first_reduced_tail(omega(disc)));
    auto base = fundamental_unit(make_discriminant(disc.d));
    auto power = least_power_in_order(base, disc.d, disc.f);
    return make_unit(disc, power.t, power.u / disc.f);
}

unsigned unit_index(Int const & d, Int const & f)
{
    if (d <= 0 || !is_fundamental(d))
        throw std::invalid_argument("unit_index: " + d.get_str()
                                    + " is not a positive fundamental discriminant");
    if (f < 1)
        throw std::invalid_argument("unit_index: conductor must be positive");
    auto base = fundamental_unit(make_discriminant(d));
    return least_power_in_order(base, d, f).exponent;
}

} // namespace quadcong
