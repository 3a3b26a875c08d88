#include <optional>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadcong/cli.hpp"
#include "quadcong/congruence.hpp"
#include "quadcong/dedekind.hpp"

namespace py = pybind11;
using namespace quadcong;

// Python int <-> mpz_class through the decimal representation.
namespace pybind11::detail {
template <> struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool)
    {
        if (!PyLong_Check(src.ptr()))
            return false;
        auto text = py::str(src).cast<std::string>();
        return value.set_str(text, 10) == 0;
    }

    static handle cast(mpz_class const & v, return_value_policy, handle)
    {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};
} // namespace pybind11::detail

namespace {

py::object fraction(Rational const & q)
{
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::cast(Int(q.get_num())), py::cast(Int(q.get_den())));
}

QuadraticIrrational irrational(Int const & delta, std::optional<Int> const & a,
                               std::optional<Int> const & b)
{
    auto disc = make_discriminant(delta);
    if (!a && !b)
        return omega(disc);
    if (!a || !b)
        throw std::invalid_argument("give both a and b, or neither");
    return QuadraticIrrational(*a, *b, disc);
}

py::dict record_dict(CongruenceRecord const & r)
{
    py::dict d;
    d["p1"] = r.p1;
    d["p2"] = r.p2;
    d["f"] = r.f;
    d["delta"] = r.delta;
    d["n"] = r.n;
    d["h_neg1"] = r.h_neg1;
    d["h_neg2"] = r.h_neg2;
    d["h_pos"] = r.h_pos;
    d["psi_omega"] = r.psi_omega;
    d["theta"] = r.theta;
    d["H"] = r.H;
    d["holds_mod8"] = r.holds_mod8;
    d["unit_x"] = r.unit_x;
    d["unit_y"] = r.unit_y;
    return d;
}

} // namespace

PYBIND11_MODULE(_quadcong, m)
{
    m.doc() = "Class numbers, Hirzebruch sums, Dedekind sums and class number congruences";

    m.def("isqrt", &isqrt, py::arg("n"));
    m.def("jacobi", &jacobi, py::arg("h"), py::arg("k"));
    m.def("kronecker", &kronecker, py::arg("d"), py::arg("n"));
    m.def("is_prime", &is_prime, py::arg("n"));

    m.def(
        "discriminant",
        [](Int const & delta) {
            auto disc = make_discriminant(delta);
            py::dict d;
            d["delta"] = disc.delta;
            d["d"] = disc.d;
            d["f"] = disc.f;
            d["sigma"] = disc.sigma;
            return d;
        },
        py::arg("delta"));

    m.def(
        "cf_expand",
        [](Int const & delta, std::optional<Int> a, std::optional<Int> b) {
            auto cf = cf_expand(irrational(delta, a, b));
            py::dict d;
            d["preperiod"] = cf.preperiod;
            d["period"] = cf.period;
            d["k"] = cf.k();
            d["l"] = cf.l();
            d["psi"] = hirzebruch_sum(cf);
            return d;
        },
        py::arg("delta"), py::arg("a") = py::none(), py::arg("b") = py::none(),
        "Continued fraction of (b + sqrt(delta))/(2a), omega by default.");

    m.def(
        "hirzebruch_sum",
        [](Int const & delta, std::optional<Int> a, std::optional<Int> b) {
            return hirzebruch_sum(cf_expand(irrational(delta, a, b)));
        },
        py::arg("delta"), py::arg("a") = py::none(), py::arg("b") = py::none());

    m.def(
        "psi_via_dedekind",
        [](Int const & delta, std::optional<Int> a, std::optional<Int> b) {
            auto xi = irrational(delta, a, b);
            return psi_via_dedekind(xi, fundamental_unit(xi.disc()));
        },
        py::arg("delta"), py::arg("a") = py::none(), py::arg("b") = py::none());

    m.def(
        "fundamental_unit",
        [](Int const & delta) {
            auto e = fundamental_unit(make_discriminant(delta));
            py::dict d;
            d["t"] = e.t;
            d["u"] = e.u;
            d["q"] = e.q;
            d["r"] = e.r;
            d["norm"] = e.norm;
            return d;
        },
        py::arg("delta"));

    m.def(
        "class_number", [](Int const & delta) { return class_number(make_discriminant(delta)); },
        py::arg("delta"));

    m.def(
        "class_structure",
        [](Int const & delta) {
            auto cs = class_structure(make_discriminant(delta));
            py::list cycles;
            for (auto const & cycle : cs.cycles) {
                py::list c;
                for (auto const & xi : cycle)
                    c.append(py::make_tuple(xi.a(), xi.b()));
                cycles.append(c);
            }
            py::dict d;
            d["h"] = cs.h;
            d["h_plus"] = cs.h_plus;
            d["unit_norm"] = cs.unit_norm;
            d["principal"] = cs.principal;
            d["cycles"] = cycles;
            return d;
        },
        py::arg("delta"), "Cycles of reduced irrationals as (a, b) pairs.");

    m.def(
        "dedekind_sum", [](Int const & h, Int const & k) { return fraction(dedekind_sum(h, k)); },
        py::arg("h"), py::arg("k"));

    m.def(
        "n_of_matrix",
        [](Int x, Int y, Int z, Int w) { return fraction(n_of_matrix(Mat2{x, y, z, w})); },
        py::arg("x"), py::arg("y"), py::arg("z"), py::arg("w"));

    m.def("theta", &theta, py::arg("d1"), py::arg("d2"), py::arg("f"));

    m.def(
        "genus_character",
        [](Int const & d1, Int const & delta, Int a, Int b, Int c) {
            return genus_character(d1, make_discriminant(delta), BQForm{a, b, c});
        },
        py::arg("d1"), py::arg("delta"), py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "verify_kmz",
        [](Int const & d1, Int const & d2, Int const & f) {
            auto r = verify_kmz(d1, d2, f);
            py::dict d;
            d["lhs"] = fraction(r.lhs);
            d["rhs_reduced"] = r.rhs_reduced;
            d["rhs_classes"] = r.rhs_classes;
            d["unit_norm"] = r.unit_norm;
            d["equal"] = r.equal;
            return d;
        },
        py::arg("d1"), py::arg("d2"), py::arg("f") = 1);

    m.def(
        "h_value", [](long p1, long p2, int f) { return record_dict(H_value(p1, p2, f)); },
        py::arg("p1"), py::arg("p2"), py::arg("f") = 1);

    m.def(
        "scan",
        [](long bound, std::vector<int> const & f_set, unsigned jobs) {
            py::list out;
            std::vector<CongruenceRecord> records;
            {
                py::gil_scoped_release release;
                records = scan(bound, f_set, jobs);
            }
            for (auto const & r : records)
                out.append(record_dict(r));
            return out;
        },
        py::arg("bound"), py::arg("f_set") = std::vector<int>{1, 2}, py::arg("jobs") = 1);

    m.def("verify_theorem_1_1", &verify_theorem_1_1, py::arg("p"));
    m.def("verify_theorem_1_2", &verify_theorem_1_2, py::arg("p"));
    m.def("verify_theorem_1_3", &verify_theorem_1_3, py::arg("p1"), py::arg("p2"));
    m.def("verify_theorem_1_4", &verify_theorem_1_4, py::arg("p1"), py::arg("p2"));

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            std::ostringstream out, err;
            int code = cli::run(std::move(args), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (code, stdout, stderr).");
}
