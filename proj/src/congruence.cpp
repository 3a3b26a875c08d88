#include "quadcong/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "quadcong/dedekind.hpp"

namespace quadcong {

namespace {

void require_negative_fundamental(Int const & d, char const * what)
{
    if (d >= 0 || !is_fundamental(d))
        throw std::invalid_argument(std::string(what) + ": " + d.get_str()
                                    + " is not a negative fundamental discriminant");
}

void require_pair(long p1, long p2)
{
    for (long p : {p1, p2}) {
        if (p < 3 || !is_prime_u64(static_cast<std::uint64_t>(p)) || p % 4 != 3)
            throw std::invalid_argument(std::to_string(p) + " is not a prime congruent to 3 mod 4");
    }
    if (p1 == p2)
        throw std::invalid_argument("p1 and p2 must be distinct");
}

void require_conductor(int f)
{
    if (f != 1 && f != 2)
        throw std::invalid_argument("conductor must be 1 or 2, got " + std::to_string(f));
}

bool divisible(Int const & n, long m)
{
    return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(m)) != 0;
}

Int psi_of_omega(Discriminant const & disc)
{
    return hirzebruch_sum(cf_expand(omega(disc)));
}

// chi * Psi for the wide class cycles[i].  A single prime discriminant d1 is
// read off an a-coefficient prime to it; otherwise the full character is
// evaluated on the canonical member.
Int class_term(ClassStructure const & cs, std::size_t i, Int const & d1)
{
    auto const & cycle = cs.cycles[i];
    auto primes = prime_discriminants(d1);
    if (primes.size() == 1) {
        Int p = abs(d1);
        if (p == 4 || p == 8)
            p = 2;
        auto rep = coprime_representative(cycle, p);
        auto [ci, j] = cs.locate(rep);
        return chi(d1, rep.a()) * cs.psi(ci, j);
    }
    return genus_character(d1, cs.disc, form_of(cycle.front())) * cs.psi(i, 0);
}

} // namespace

KmzReport verify_kmz(Int const & d1, Int const & d2, Int const & f)
{
    require_negative_fundamental(d1, "verify_kmz");
    require_negative_fundamental(d2, "verify_kmz");
    if (d1 == d2)
        throw std::invalid_argument("verify_kmz: d1 and d2 must be distinct");
    if (f < 1)
        throw std::invalid_argument("verify_kmz: conductor must be positive");

    KmzReport report;
    report.d1 = d1;
    report.d2 = d2;
    report.f = f;
    auto disc = make_discriminant(d1 * d2 * f * f);
    auto cs = class_structure(disc);
    report.unit_norm = cs.unit_norm;

    long h1 = class_number_negative(make_discriminant(d1));
    long h2 = class_number_negative(make_discriminant(d2));
    report.lhs = make_rational(24 * Int(h1) * h2 * theta(d1, d2, f),
                               Int(roots_of_unity(d1)) * roots_of_unity(d2));

    report.rhs_reduced = 0;
    report.rhs_classes = 0;
    for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
        for (std::size_t j = 0; j < cs.cycles[i].size(); ++j)
            report.rhs_reduced += genus_character(d1, disc, form_of(cs.cycles[i][j]))
                                  * cs.floors[i][j];
        report.rhs_classes += class_term(cs, i, d1);
    }
    report.equal = report.unit_norm == 1 && report.lhs == Rational(report.rhs_reduced)
                   && report.rhs_reduced == report.rhs_classes;
    return report;
}

std::string factorization_string(Int const & n, bool typeset)
{
    if (n == 0)
        return "0";
    std::string out = n < 0 ? "-" : "";
    if (abs(n) == 1)
        return out + "1";
    bool first = true;
    for (auto const & [p, e] : factorize(n)) {
        if (!first)
            out += typeset ? "·" : "*";
        first = false;
        out += p.get_str();
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

CongruenceRecord H_value(long p1, long p2, int f)
{
    require_pair(p1, p2);
    require_conductor(f);
    CongruenceRecord rec;
    rec.p1 = p1;
    rec.p2 = p2;
    rec.f = f;
    rec.n = std::min(p1, p2) > 3 ? 6 : 2;
    rec.delta = Int(p1) * p2 * f * f;

    auto disc = make_discriminant(rec.delta);
    rec.h_pos = class_structure(disc).h;
    rec.psi_omega = psi_of_omega(disc);
    if (!divisible(rec.psi_omega, rec.n))
        throw std::logic_error("Psi(omega_" + rec.delta.get_str() + ") = "
                               + rec.psi_omega.get_str() + " is not divisible by "
                               + std::to_string(rec.n));
    rec.h_neg1 = class_number_negative(make_discriminant(-p1));
    rec.h_neg2 = class_number_negative(make_discriminant(-p2));
    rec.theta = f == 1 ? Int(1) : theta(-p1, -p2, f);
    rec.H = Int(rec.h_pos) * (rec.psi_omega / rec.n) - Int(rec.h_neg1) * rec.h_neg2 * rec.theta;

    auto unit = fundamental_unit(make_discriminant(Int(p1) * p2));
    rec.unit_x = unit.q;
    rec.unit_y = unit.r;
    rec.holds_mod8 = divisible(rec.H, 8);
    return rec;
}

bool verify_theorem_1_3(long p1, long p2)
{
    return H_value(p1, p2, 1).holds_mod8;
}

bool verify_theorem_1_4(long p1, long p2)
{
    return H_value(p1, p2, 2).holds_mod8;
}

namespace {

bool mod16_identity(long h_imag, Discriminant const & real_disc)
{
    Int psi = psi_of_omega(real_disc);
    if (!divisible(psi, 3))
        return false;
    Int diff = Int(h_imag) - Int(class_structure(real_disc).h) * (psi / 3);
    return divisible(diff, 16);
}

} // namespace

bool verify_theorem_1_1(long p)
{
    if (p <= 3 || !is_prime_u64(static_cast<std::uint64_t>(p)) || p % 4 != 3)
        throw std::invalid_argument(std::to_string(p) + " is not a prime p > 3 with p = 3 mod 4");
    return mod16_identity(class_number_negative(make_discriminant(-p)),
                          make_discriminant(Int(4) * p));
}

bool verify_theorem_1_2(long p)
{
    if (p < 5 || !is_prime_u64(static_cast<std::uint64_t>(p)) || p % 4 != 1)
        throw std::invalid_argument(std::to_string(p) + " is not a prime p = 1 mod 4");
    return mod16_identity(class_number_negative(make_discriminant(Int(-4) * p)),
                          make_discriminant(Int(16) * p));
}

namespace {

long mod(Int const & n, unsigned long m)
{
    return static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), m));
}

// Integers X, Y with p1 (x + y sqrt(D)) = (X + Y sqrt(D))^2, D = p1 p2.
bool extract_square(long p1, long p2, Int const & x, Int const & y)
{
    Int big_d = Int(p1) * p2;
    for (int alpha : {1, -1}) {
        Int num = x + alpha;
        if (!divisible(num, 2 * p2))
            continue;
        Int y_sq = num / (2 * p2);
        if (y_sq <= 0 || !is_square(y_sq))
            continue;
        Int big_y = isqrt(y_sq);
        Int xy_twice = p1 * y;
        if (!mpz_divisible_p(xy_twice.get_mpz_t(), Int(2 * big_y).get_mpz_t()))
            continue;
        Int big_x = xy_twice / (2 * big_y);
        if (big_x * big_x + big_d * big_y * big_y == p1 * x && 2 * big_x * big_y == p1 * y)
            return true;
    }
    return false;
}

} // namespace

LemmaReport check_unit_lemmas(long p1, long p2)
{
    require_pair(p1, p2);
    LemmaReport report;
    auto expect = [&](bool ok, std::string clause) {
        report.checked.push_back(clause);
        if (!ok)
            report.failures.push_back(std::move(clause));
    };

    Int big_d = Int(p1) * p2;
    auto disc = make_discriminant(big_d);
    auto unit = fundamental_unit(disc);
    long h = class_structure(disc).h;
    long d_mod8 = mod(big_d, 8);
    bool half_integral = mpz_odd_p(unit.t.get_mpz_t()) != 0;

    expect(h % 2 == 1, "h(p1p2) odd");
    expect(unit.norm == 1, "N(eps_p1p2) = 1");
    if (d_mod8 == 1)
        expect(!half_integral && mpz_even_p(unit.u.get_mpz_t()), "t, u even");

    auto disc4 = make_discriminant(4 * big_d);
    auto unit4 = fundamental_unit(disc4);
    long h4 = class_structure(disc4).h;
    // eps_4D = (t' + u' sqrt(4D))/2 = (t' + 2u' sqrt(D))/2.
    std::pair<Int, Int> eps4{unit4.t, 2 * unit4.u};
    if (d_mod8 == 1) {
        expect(h4 == h && eps4 == std::pair<Int, Int>{unit.t, unit.u},
               "(h(4D), eps_4D) = (h(D), eps_D)");
    } else if (!half_integral) {
        expect(h4 == 3 * h && eps4 == std::pair<Int, Int>{unit.t, unit.u},
               "(h(4D), eps_4D) = (3h(D), eps_D)");
    } else {
        expect(h4 == h && eps4 == unit_power(big_d, unit.t, unit.u, 3),
               "(h(4D), eps_4D) = (h(D), eps_D^3)");
    }

    std::vector<int> conductors = (d_mod8 == 5 && half_integral) ? std::vector<int>{2}
                                                                  : std::vector<int>{1, 2};
    for (int f : conductors) {
        auto const & e = f == 1 ? unit : unit4;
        std::string tag = "f=" + std::to_string(f) + ": ";
        // eps = x + y sqrt(D)
        Int twice_x = e.t;
        Int twice_y = e.u * f;
        bool integral = mpz_even_p(twice_x.get_mpz_t()) && mpz_even_p(twice_y.get_mpz_t());
        expect(integral, tag + "x, y integral");
        if (!integral)
            continue;
        Int x = twice_x / 2;
        Int y = twice_y / 2;
        expect(mod(x, 8) == 7, tag + "x = 7 mod 8");
        expect(mod(y, 4) == 0, tag + "y = 0 mod 4");
        if (p1 % 8 == 3 && p2 % 8 == 3)
            expect(mod(y, 8) == 4, tag + "y = 4 mod 8 for (3,3) mod 8");
        if (p1 % 8 == 7 && p2 % 8 == 7)
            expect(mod(y, 8) == 0, tag + "y = 0 mod 8 for (7,7) mod 8");
        expect(extract_square(p1, p2, x, y), tag + "p1 eps = (X + Y sqrt(D))^2");
    }

    if (d_mod8 == 5 && half_integral)
        expect(mod(unit.t, 4) == 1, "t = 1 mod 4");
    return report;
}

bool check_class_term_congruence(long p1, long p2, int f)
{
    require_pair(p1, p2);
    require_conductor(f);
    auto disc = make_discriminant(Int(p1) * p2 * f * f);
    auto cs = class_structure(disc);
    Int psi = psi_of_omega(disc);
    Int d1 = -p1;
    for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
        Int term = class_term(cs, i, d1);
        if (!divisible(term - psi, 8))
            return false;
        if (i == cs.principal && term != psi)
            return false;
    }
    return cs.h % 2 == 1;
}

bool check_inverse_pairing(long p1, long p2, int f)
{
    require_pair(p1, p2);
    require_conductor(f);
    auto disc = make_discriminant(Int(p1) * p2 * f * f);
    auto cs = class_structure(disc);
    Int d1 = -p1;
    for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
        auto rep = coprime_representative(cs.cycles[i], Int(p1));
        auto partner = op_partner(rep);
        if (!is_reduced(partner))
            return false;
        auto j = cs.locate(partner).first;
        if (class_term(cs, i, d1) != class_term(cs, j, d1))
            return false;
        // Only the principal class can be its own inverse when h is odd.
        if (j == i && i != cs.principal)
            return false;
    }
    return true;
}

std::vector<std::pair<long, long>> scan_pairs(long bound)
{
    std::vector<long> primes;
    if (bound >= 21) {
        for (auto p : primes_up_to(static_cast<std::uint64_t>(bound / 3))) {
            if (p % 4 == 3)
                primes.push_back(static_cast<long>(p));
        }
    }
    std::vector<std::pair<long, long>> pairs;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size() && primes[i] * primes[j] <= bound; ++j)
            pairs.emplace_back(primes[i], primes[j]);
    }
    std::sort(pairs.begin(), pairs.end(), [](auto const & l, auto const & r) {
        return l.first * l.second < r.first * r.second;
    });
    return pairs;
}

std::vector<RecordKey> scan_keys(long bound, std::vector<int> const & f_set)
{
    std::vector<int> fs = f_set;
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    for (int f : fs)
        require_conductor(f);
    std::vector<RecordKey> keys;
    for (auto const & [p1, p2] : scan_pairs(bound)) {
        for (int f : fs)
            keys.push_back({p1, p2, f});
    }
    return keys;
}

std::vector<CongruenceRecord> compute_records(std::vector<RecordKey> const & keys, unsigned jobs)
{
    std::vector<CongruenceRecord> out(keys.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= keys.size())
                return;
            try {
                out[i] = H_value(keys[i].p1, keys[i].p2, keys[i].f);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

std::vector<CongruenceRecord> scan(long bound, std::vector<int> const & f_set, unsigned jobs)
{
    return compute_records(scan_keys(bound, f_set), jobs);
}

} // namespace quadcong
