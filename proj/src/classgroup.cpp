#include "quadcong/classgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quadcong {

BQForm form_of(QuadraticIrrational const & xi)
{
    return BQForm{xi.a(), xi.b(), xi.c()};
}

std::pair<std::size_t, std::size_t> ClassStructure::locate(QuadraticIrrational const & xi) const
{
    auto it = index_.find({xi.b(), xi.a()});
    if (it == index_.end())
        throw std::invalid_argument("locate: (" + xi.b().get_str() + " + sqrt(delta))/(2*"
                                    + xi.a().get_str() + ") is not a reduced member");
    return it->second;
}

Int ClassStructure::psi(std::size_t i, std::size_t j) const
{
    auto const & v = floors.at(i);
    std::size_t len = v.size();
    if (len % 2)
        return 0;
    Int sum = 0;
    for (std::size_t s = 0; s < len; ++s) {
        if (s % 2)
            sum -= v[(j + s) % len];
        else
            sum += v[(j + s) % len];
    }
    return sum;
}

long class_number_negative(Discriminant const & disc)
{
    if (disc.delta >= 0)
        throw std::domain_error("class_number_negative: discriminant must be negative");
    std::int64_t delta = to_i64(disc.delta);
    long count = 0;
    // Reduced: |b| <= a <= c, and b >= 0 when |b| = a or a = c.
    for (std::int64_t a = 1; 3 * a * a <= -delta; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (((b - delta) & 1) != 0)
                continue;
            std::int64_t num = b * b - delta;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            ++count;
        }
    }
    return count;
}

std::vector<QuadraticIrrational> enumerate_reduced(Discriminant const & disc)
{
    if (disc.delta <= 0)
        throw std::domain_error("enumerate_reduced: discriminant must be positive");
    std::int64_t delta = to_i64(disc.delta);
    std::int64_t root = to_i64(disc.root);
    std::vector<QuadraticIrrational> out;
    // b < sqrt(delta), r - b < 2a <= r + b, a | (delta - b^2)/4.
    for (std::int64_t b = 1; b <= root; ++b) {
        if (((b - delta) & 1) != 0)
            continue;
        std::int64_t norm = (delta - b * b) / 4;
        std::int64_t lo = (root - b) / 2 + 1;
        std::int64_t hi = (root + b) / 2;
        for (std::int64_t a = lo; a <= hi; ++a) {
            if (norm % a != 0)
                continue;
            std::int64_t c = -norm / a;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            out.emplace_back(Int(static_cast<long>(a)), Int(static_cast<long>(b)), disc);
        }
    }
    return out;
}

ClassStructure class_structure(Discriminant const & disc)
{
    ClassStructure cs;
    cs.disc = disc;
    auto reduced = enumerate_reduced(disc);
    std::map<std::pair<Int, Int>, bool> seen;
    for (auto const & xi : reduced)
        seen[{xi.b(), xi.a()}] = false;

    for (auto const & start : reduced) {
        if (seen[{start.b(), start.a()}])
            continue;
        std::vector<QuadraticIrrational> cycle;
        std::vector<Int> floors;
        QuadraticIrrational cur = start;
        do {
            auto it = seen.find({cur.b(), cur.a()});
            if (it == seen.end() || it->second)
                throw std::logic_error("class_structure: cycle left the reduced set");
            it->second = true;
            auto step = cf_step(cur);
            cycle.push_back(cur);
            floors.push_back(std::move(step.floor));
            cur = std::move(step.next);
        } while (!(cur == start));
        // `reduced` is ordered by (b, a), so the first unseen member is already
        // the canonical start of its cycle.
        cs.cycles.push_back(std::move(cycle));
        cs.floors.push_back(std::move(floors));
    }

    for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
        for (std::size_t j = 0; j < cs.cycles[i].size(); ++j)
            cs.index_[{cs.cycles[i][j].b(), cs.cycles[i][j].a()}] = {i, j};
    }

    QuadraticIrrational tail = omega(disc);
    while (!is_reduced(tail))
        tail = cf_step(tail).next;
    cs.principal = cs.locate(tail).first;

    // Proper classes are orbits of the double step: two per cycle of even
    // length, one per cycle of odd length.
    bool even = cs.cycles.front().size() % 2 == 0;
    for (auto const & cycle : cs.cycles) {
        if ((cycle.size() % 2 == 0) != even)
            throw std::logic_error("class_structure: cycles disagree on period parity");
        cs.h_plus += static_cast<long>(std::gcd<std::size_t>(2, cycle.size()));
    }
    cs.h = static_cast<long>(cs.cycles.size());
    cs.unit_norm = even ? 1 : -1;
    return cs;
}

long class_number(Discriminant const & disc)
{
    if (disc.delta < 0)
        return class_number_negative(disc);
    return class_structure(disc).h;
}

long class_number_by_conductor(Int const & d, Int const & f)
{
    if (d <= 0 || !is_fundamental(d))
        throw std::invalid_argument("class_number_by_conductor: " + d.get_str()
                                    + " is not a positive fundamental discriminant");
    if (f < 1)
        throw std::invalid_argument("class_number_by_conductor: conductor must be positive");
    Rational h = class_structure(make_discriminant(d)).h;
    if (f == 1)
        return h.get_num().get_si();
    h *= make_rational(f, unit_index(d, f));
    for (auto const & [q, e] : factorize(f))
        h *= 1 - make_rational(chi(d, q), q);
    if (h.get_den() != 1)
        throw std::logic_error("class_number_by_conductor: non-integral result " + h.get_str());
    return h.get_num().get_si();
}

std::vector<Int> prime_discriminants(Int const & d)
{
    if (!is_fundamental(d))
        throw std::invalid_argument("prime_discriminants: " + d.get_str()
                                    + " is not fundamental");
    std::vector<Int> out;
    Int odd_product = 1;
    for (auto const & [q, e] : factorize(d)) {
        if (q == 2)
            continue;
        Int star = mpz_fdiv_ui(q.get_mpz_t(), 4) == 1 ? q : Int(-q);
        odd_product *= star;
        out.push_back(star);
    }
    if (odd_product != d)
        out.insert(out.begin(), d / odd_product); // 2* in {-4, 8, -8}
    return out;
}

int genus_character(Int const & d1, Discriminant const & disc, BQForm const & form)
{
    if (form.discriminant() != disc.delta)
        throw std::invalid_argument("genus_character: form has the wrong discriminant");
    if (!mpz_divisible_p(disc.delta.get_mpz_t(), d1.get_mpz_t()))
        throw std::invalid_argument("genus_character: " + d1.get_str() + " does not divide "
                                    + disc.delta.get_str());
    make_discriminant(disc.delta / d1); // d2 f^2 must itself be a discriminant
    int value = 1;
    for (auto const & q_star : prime_discriminants(d1)) {
        Int q = abs(q_star);
        if (q == 4 || q == 8)
            q = 2;
        if (gcd(form.a, q) == 1)
            value *= chi(q_star, form.a);
        else if (gcd(form.c, q) == 1)
            value *= chi(q_star, form.c);
        else
            throw std::logic_error("genus_character: a and c both share the prime "
                                   + q.get_str() + " with d1");
    }
    return value;
}

QuadraticIrrational coprime_representative(std::vector<QuadraticIrrational> const & cycle,
                                           Int const & p)
{
    if (cycle.empty())
        throw std::invalid_argument("coprime_representative: empty cycle");
    auto const & first = cycle.front();
    if (gcd(first.a(), p) == 1)
        return first;
    // If p | a then p | b and p does not divide c, so one step moves c into
    // the a-slot up to a translate that p cannot divide.
    auto next = cf_step(first).next;
    if (gcd(next.a(), p) == 1)
        return next;
    for (auto const & xi : cycle) {
        if (gcd(xi.a(), p) == 1)
            return xi;
    }
    throw std::invalid_argument("coprime_representative: every a-coefficient in the cycle is "
                                "divisible by " + p.get_str());
}

Int theta(Int const & d1, Int const & d2, Int const & f)
{
    if (d1 >= 0 || d2 >= 0 || !is_fundamental(d1) || !is_fundamental(d2))
        throw std::invalid_argument("theta: both discriminants must be negative fundamental");
    if (d1 == d2)
        throw std::invalid_argument("theta: discriminants must be distinct");
    if (f < 1)
        throw std::invalid_argument("theta: conductor must be positive");
    Rational product = 1;
    for (auto const & [p, m] : factorize(f)) {
        int c1 = chi(d1, p);
        int c2 = chi(d2, p);
        Int pk = 1;
        for (unsigned i = 1; i < m; ++i)
            pk *= p;
        Int num = Int((1 - c1) * (1 - c2)) - pk * (p - c1) * (p - c2);
        product *= make_rational(num, 1 - p);
    }
    if (product.get_den() != 1)
        throw std::logic_error("theta: non-integral value " + product.get_str());
    return product.get_num();
}

int roots_of_unity(Int const & d)
{
    if (d >= 0)
        throw std::invalid_argument("roots_of_unity: discriminant must be negative");
    if (d == -3)
        return 6;
    if (d == -4)
        return 4;
    return 2;
}

} // namespace quadcong
