#ifndef QUADCONG_CLASSGROUP_HPP
#define QUADCONG_CLASSGROUP_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "quadcong/arith.hpp"
#include "quadcong/quadratic.hpp"

namespace quadcong {

/// Primitive binary quadratic form a x^2 + b xy + c y^2.
struct BQForm {
    Int a, b, c;

    Int discriminant() const { return b * b - 4 * a * c; }
};

/// The form [a, b, c] attached to (b + sqrt(delta)) / (2a).
BQForm form_of(QuadraticIrrational const & xi);

/// Reduced irrationals of a positive discriminant, grouped into
/// continued-fraction cycles.  Each cycle is one wide class and starts at its
/// lexicographically least (b, a) member; cycles are ordered by that member.
struct ClassStructure {
    Discriminant disc;
    std::vector<std::vector<QuadraticIrrational>> cycles;
    std::vector<std::vector<Int>> floors; // floors[i][j] = floor(cycles[i][j])
    std::size_t principal = 0;            // cycle holding the reduced tails of omega
    long h = 0;
    long h_plus = 0;
    int unit_norm = 1;

    /// Cycle index and position of a reduced irrational; throws if absent.
    std::pair<std::size_t, std::size_t> locate(QuadraticIrrational const & xi) const;

    /// Hirzebruch sum of the purely periodic cycles[i][j].
    Int psi(std::size_t i, std::size_t j) const;

  private:
    friend ClassStructure class_structure(Discriminant const & disc);
    std::map<std::pair<Int, Int>, std::pair<std::size_t, std::size_t>> index_;
};

/// Reduced positive-definite primitive forms of a negative discriminant.
long class_number_negative(Discriminant const & disc);

/// All primitive reduced irrationals, ordered by (b, a).
std::vector<QuadraticIrrational> enumerate_reduced(Discriminant const & disc);

ClassStructure class_structure(Discriminant const & disc);

/// Wide class number of either sign of discriminant.
long class_number(Discriminant const & disc);

/// h(f^2 d) from h(d), the unit index and the Euler factor at primes of f.
long class_number_by_conductor(Int const & d, Int const & f);

/// Prime discriminants q* whose product is the fundamental d.
std::vector<Int> prime_discriminants(Int const & d);

/// chi_{d1, d2}^{(delta)} of the class of a form of discriminant delta.
int genus_character(Int const & d1, Discriminant const & disc, BQForm const & form);

/// A member of the cycle whose a-coefficient is prime to p.
QuadraticIrrational coprime_representative(std::vector<QuadraticIrrational> const & cycle,
                                           Int const & p);

/// The conductor Euler factor; 1 for f = 1.
Int theta(Int const & d1, Int const & d2, Int const & f);

/// Number of roots of unity in the imaginary quadratic order of discriminant d.
int roots_of_unity(Int const & d);

} // namespace quadcong

#endif
