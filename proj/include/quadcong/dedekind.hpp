#ifndef QUADCONG_DEDEKIND_HPP
#define QUADCONG_DEDEKIND_HPP

#include "quadcong/arith.hpp"
#include "quadcong/quadratic.hpp"

namespace quadcong {

/// Integral 2x2 matrix [[x, y], [z, w]].
struct Mat2 {
    Int x, y, z, w;

    Int det() const { return x * w - y * z; }
    Int trace() const { return x + w; }

    bool operator==(Mat2 const & o) const
    {
        return x == o.x && y == o.y && z == o.z && w == o.w;
    }
};

Mat2 operator*(Mat2 const & l, Mat2 const & r);

/// Inverse of a unimodular matrix.
Mat2 inverse(Mat2 const & m);

/// s(h, k) through the reciprocity law, O(log k) steps.
Rational dedekind_sum(Int const & h, Int const & k);

/// s(h, k) straight from the defining sum; O(k), k <= 10^5.
Rational dedekind_sum_naive(Int const & h, Int const & k);

/// n_M = (x + w)/z - sign(z) (3 + 12 s(w, |z|)) for det M = 1, z != 0.
Rational n_of_matrix(Mat2 const & m);

/// Matrix of multiplication by the unit on the basis (omega, 1).
Mat2 m_of_omega(Discriminant const & disc, UnitCoeffs const & unit);

/// Matrix M with unit*xi = x xi + y and unit = z xi + w.
Mat2 m_of_irrational(QuadraticIrrational const & xi, UnitCoeffs const & unit);

/// Hirzebruch sum computed as n(M_xi); xi must be reduced or omega.
Int psi_via_dedekind(QuadraticIrrational const & xi, UnitCoeffs const & unit);

} // namespace quadcong

#endif
