#include "quadcong/dedekind.hpp"

#include <stdexcept>

namespace quadcong {

Mat2 operator*(Mat2 const & l, Mat2 const & r)
{
    return Mat2{l.x * r.x + l.y * r.z, l.x * r.y + l.y * r.w, l.z * r.x + l.w * r.z,
                l.z * r.y + l.w * r.w};
}

Mat2 inverse(Mat2 const & m)
{
    Int d = m.det();
    if (d == 1)
        return Mat2{m.w, -m.y, -m.z, m.x};
    if (d == -1)
        return Mat2{-m.w, m.y, m.z, -m.x};
    throw std::invalid_argument("inverse: matrix is not unimodular");
}

namespace {

void require_coprime(Int const & h, Int const & k)
{
    if (k < 1)
        throw std::invalid_argument("dedekind sum: k must be positive, got " + k.get_str());
    if (gcd(h, k) != 1)
        throw std::invalid_argument("dedekind sum: gcd(" + h.get_str() + ", " + k.get_str()
                                    + ") != 1");
}

} // namespace

Rational dedekind_sum(Int const & h, Int const & k)
{
    require_coprime(h, k);
    // s(h,k) = sign * s(a, b); reduce a mod b, then reciprocity
    // s(a,b) = (a^2 + b^2 + 1)/(12ab) - 1/4 - s(b,a).
    Rational total = 0;
    int sign = 1;
    Int a = mod_floor(h, k);
    Int b = k;
    while (b > 1) {
        Rational term = make_rational(a * a + b * b + 1, 12 * a * b) - Rational(1, 4);
        if (sign > 0)
            total += term;
        else
            total -= term;
        sign = -sign;
        Int next_a = mod_floor(b, a);
        b = std::move(a);
        a = std::move(next_a);
    }
    return total;
}

Rational dedekind_sum_naive(Int const & h, Int const & k)
{
    require_coprime(h, k);
    if (k > 100000)
        throw std::invalid_argument("dedekind_sum_naive: k above oracle limit 10^5");
    // ((j/k)) = (2 (j mod k) - k) / (2k) off multiples of k; accumulate the
    // numerators over the common denominator 4k^2.
    Int numerator = 0;
    Int hk = mod_floor(h, k);
    for (Int m = 1; m <= k; ++m) {
        Int hm = mod_floor(hk * m, k);
        Int mm = mod_floor(m, k);
        if (hm == 0 || mm == 0)
            continue;
        numerator += (2 * hm - k) * (2 * mm - k);
    }
    return make_rational(numerator, 4 * k * k);
}

Rational n_of_matrix(Mat2 const & m)
{
    if (m.z == 0)
        throw std::invalid_argument("n_of_matrix: lower-left entry is zero");
    if (m.det() != 1)
        throw std::invalid_argument("n_of_matrix: determinant is not 1");
    Int abs_z = abs(m.z);
    Rational tail = 3 + 12 * dedekind_sum(m.w, abs_z);
    Rational head = make_rational(m.x + m.w, m.z);
    return m.z > 0 ? Rational(head - tail) : Rational(head + tail);
}

Mat2 m_of_omega(Discriminant const & disc, UnitCoeffs const & unit)
{
    if (disc.delta <= 0)
        throw std::domain_error("m_of_omega: requires a positive discriminant");
    if (unit.norm != 1)
        throw std::invalid_argument("m_of_omega: unit has norm -1");
    Int const & q = unit.q;
    Int const & r = unit.r;
    return Mat2{q + r * disc.sigma, r * (disc.delta - disc.sigma) / 4, r, q};
}

Mat2 m_of_irrational(QuadraticIrrational const & xi, UnitCoeffs const & unit)
{
    auto const & disc = xi.disc();
    if (disc.delta <= 0)
        throw std::domain_error("m_of_irrational: requires a positive discriminant");
    if (unit.norm != 1)
        throw std::invalid_argument("m_of_irrational: unit has norm -1");
    Int diff = xi.b() - disc.sigma;
    if (mpz_odd_p(diff.get_mpz_t()))
        throw std::logic_error("m_of_irrational: b and delta have different parity");
    // Conjugating M_omega by [[1, m], [0, a]] with b = 2m + sigma.
    Int m = diff / 2;
    Int const & q = unit.q;
    Int const & r = unit.r;
    Mat2 out{q + r * m + r * disc.sigma, -r * xi.c(), r * xi.a(), q - r * m};
    if (out.det() != 1)
        throw std::logic_error("m_of_irrational: result is not unimodular");
    return out;
}

Int psi_via_dedekind(QuadraticIrrational const & xi, UnitCoeffs const & unit)
{
    if (unit.norm != 1)
        throw std::invalid_argument("psi_via_dedekind: unit has norm -1");
    if (!is_reduced(xi) && !(xi == omega(xi.disc())))
        throw std::invalid_argument("psi_via_dedekind: xi must be reduced or omega");
    Rational n = n_of_matrix(m_of_irrational(xi, unit));
    if (n.get_den() != 1)
        throw std::logic_error("psi_via_dedekind: n(xi) = " + n.get_str() + " is not integral");
    return n.get_num();
}

} // namespace quadcong
