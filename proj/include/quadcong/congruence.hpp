#ifndef QUADCONG_CONGRUENCE_HPP
#define QUADCONG_CONGRUENCE_HPP

#include <compare>
#include <string>
#include <vector>

#include "quadcong/arith.hpp"
#include "quadcong/classgroup.hpp"
#include "quadcong/quadratic.hpp"

namespace quadcong {

/// Both sides of the class number identity for a pair of imaginary
/// discriminants and a conductor.
struct KmzReport {
    Int d1, d2, f;
    Rational lhs;       // 24 h(d1) h(d2) / (w(d1) w(d2)) * theta
    Int rhs_reduced;    // sum over reduced xi of chi * floor(xi)
    Int rhs_classes;    // sum over wide classes of chi * Psi
    int unit_norm = 1;
    bool equal = false;
};

KmzReport verify_kmz(Int const & d1, Int const & d2, Int const & f);

/// One row of the congruence tables for primes p1 < p2, both 3 mod 4.
struct CongruenceRecord {
    long p1 = 0, p2 = 0;
    int f = 1;
    int n = 2;
    Int delta;
    long h_neg1 = 0, h_neg2 = 0;
    long h_pos = 0;
    Int psi_omega;
    Int theta;
    Int H;
    Int unit_x, unit_y; // fundamental unit of Q(sqrt(p1 p2)) as x + y omega
    bool holds_mod8 = false;
};

CongruenceRecord H_value(long p1, long p2, int f);

/// "2^3*3" (ascii) or "2^3·3" (typeset); zero renders as "0".
std::string factorization_string(Int const & n, bool typeset);

bool verify_theorem_1_3(long p1, long p2);
bool verify_theorem_1_4(long p1, long p2);

/// h(-p) = h(4p) Psi(omega_4p) / 3 mod 16 for primes p = 3 mod 4, p > 3.
bool verify_theorem_1_1(long p);

/// h(-4p) = h(16p) Psi(omega_16p) / 3 mod 16 for primes p = 1 mod 4.
bool verify_theorem_1_2(long p);

struct LemmaReport {
    std::vector<std::string> checked;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Unit-structure facts for O_{p1 p2} and O_{4 p1 p2}.
LemmaReport check_unit_lemmas(long p1, long p2);

/// Every wide class term chi * Psi is congruent to Psi(omega) mod 8.
bool check_class_term_congruence(long p1, long p2, int f);

/// Terms of a class and of its inverse (via xi -> floor(xi) - xi') agree.
bool check_inverse_pairing(long p1, long p2, int f);

/// Records for p1 < p2, both 3 mod 4, p1 p2 <= bound, ordered by (p1 p2, f).
std::vector<CongruenceRecord> scan(long bound, std::vector<int> const & f_set, unsigned jobs = 1);

struct RecordKey {
    long p1, p2;
    int f;

    auto operator<=>(RecordKey const &) const = default;
};

/// H_value for every key, spread over `jobs` threads; output order matches keys.
std::vector<CongruenceRecord> compute_records(std::vector<RecordKey> const & keys, unsigned jobs);

/// Scan keys in (p1 p2, f) order.
std::vector<RecordKey> scan_keys(long bound, std::vector<int> const & f_set);

/// Pairs (p1, p2) of primes 3 mod 4 with p1 < p2, p1 p2 <= bound.
std::vector<std::pair<long, long>> scan_pairs(long bound);

} // namespace quadcong

#endif
