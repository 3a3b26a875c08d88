#ifndef QUADCONG_QUADRATIC_HPP
#define QUADCONG_QUADRATIC_HPP

#include <vector>

#include "quadcong/arith.hpp"

namespace quadcong {

/// A quadratic discriminant delta = f^2 d with d fundamental.
struct Discriminant {
    Int delta;
    Int d;
    Int f;
    int sigma = 0; // delta mod 2
    Int root;      // floor(sqrt(delta)) for delta > 0, else 0

    bool operator==(Discriminant const & o) const { return delta == o.delta; }
};

bool is_fundamental(Int const & d);

/// Validates delta and splits it as f^2 d.  Throws std::invalid_argument
/// naming the violated condition.
Discriminant make_discriminant(Int const & delta);

struct CfStep;

/// xi = (b + sqrt(delta)) / (2a) with c = (b^2 - delta) / (4a) integral and
/// gcd(a, b, c) = 1.
class QuadraticIrrational
{
  public:
    QuadraticIrrational(Int a, Int b, Discriminant disc);

    Int const & a() const { return a_; }
    Int const & b() const { return b_; }
    Int const & c() const { return c_; }
    Discriminant const & disc() const { return disc_; }

    bool operator==(QuadraticIrrational const & o) const
    {
        return a_ == o.a_ && b_ == o.b_ && disc_ == o.disc_;
    }

  private:
    friend CfStep cf_step(QuadraticIrrational const & xi);

    QuadraticIrrational(Int a, Int b, Int c, Discriminant const & disc)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), disc_(disc)
    {}

    Int a_, b_, c_;
    Discriminant disc_;
};

/// omega = (sigma + sqrt(delta)) / 2.
QuadraticIrrational omega(Discriminant const & disc);

/// Exact floor of xi.
Int floor_of(QuadraticIrrational const & xi);

struct CfStep {
    Int floor;
    QuadraticIrrational next;
};

/// One continued-fraction step: floor(xi) and 1 / (xi - floor(xi)).
CfStep cf_step(QuadraticIrrational const & xi);

/// xi > 1 and -1 < xi' < 0.  Requires delta > 0.
bool is_reduced(QuadraticIrrational const & xi);

/// floor(xi) - xi', the partner used for inverse-class pairing.
QuadraticIrrational op_partner(QuadraticIrrational const & xi);

struct CFExpansion {
    std::vector<Int> preperiod;
    std::vector<Int> period;

    std::size_t k() const { return preperiod.size(); }
    std::size_t l() const { return period.size(); }
};

/// Minimal pre-period (first reduced tail) and minimal period.
CFExpansion cf_expand(QuadraticIrrational const & xi);

/// Alternating sum of the period signed by the pre-period parity; 0 for odd l.
Int hirzebruch_sum(CFExpansion const & cf);

/// epsilon = (t + u sqrt(delta)) / 2 = q + r omega, norm = t^2 - delta u^2 over 4.
struct UnitCoeffs {
    Int t;
    Int u;
    Int q;
    Int r;
    int norm = 1;
};

UnitCoeffs make_unit(Discriminant const & disc, Int t, Int u);

/// Fundamental unit of the multiplier ring of a reduced irrational, read off
/// the convergent matrix of one period of its expansion.
UnitCoeffs unit_from_cycle(QuadraticIrrational const & reduced);

UnitCoeffs fundamental_unit(Discriminant const & disc);

/// Exponent n with epsilon_{f^2 d} = epsilon_d^n.
unsigned unit_index(Int const & d, Int const & f);

/// (t + u sqrt(delta))/2 raised to the n-th power, as (T, U) over 2.
std::pair<Int, Int> unit_power(Int const & delta, Int const & t, Int const & u, unsigned n);

} // namespace quadcong

#endif
