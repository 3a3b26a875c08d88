#include "quadcong/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadcong/classgroup.hpp"
#include "quadcong/dedekind.hpp"
#include "quadcong/quadratic.hpp"

namespace quadcong::cli {

using json = nlohmann::ordered_json;

namespace {

json json_int(Int const & n)
{
    if (n.fits_slong_p())
        return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

Int int_from_json(json const & v)
{
    if (v.is_number_integer())
        return Int(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string())
        return Int(v.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

Int parse_int(std::string const & text, char const * what)
{
    Int n;
    if (text.empty() || n.set_str(text, 10) != 0)
        throw std::invalid_argument(std::string(what) + ": '" + text + "' is not an integer");
    return n;
}

std::uint64_t fnv1a(std::string const & s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

json record_json(CongruenceRecord const & rec)
{
    json j;
    j["p1"] = rec.p1;
    j["p2"] = rec.p2;
    j["f"] = rec.f;
    j["delta"] = json_int(rec.delta);
    j["n"] = rec.n;
    j["h_neg1"] = rec.h_neg1;
    j["h_neg2"] = rec.h_neg2;
    j["h_pos"] = rec.h_pos;
    j["psi_omega"] = json_int(rec.psi_omega);
    j["theta"] = json_int(rec.theta);
    j["H"] = json_int(rec.H);
    j["holds_mod8"] = rec.holds_mod8;
    j["unit_x"] = json_int(rec.unit_x);
    j["unit_y"] = json_int(rec.unit_y);
    return j;
}

CongruenceRecord record_from(json const & j)
{
    CongruenceRecord rec;
    rec.p1 = j.at("p1").get<long>();
    rec.p2 = j.at("p2").get<long>();
    rec.f = j.at("f").get<int>();
    rec.delta = int_from_json(j.at("delta"));
    rec.n = j.at("n").get<int>();
    rec.h_neg1 = j.at("h_neg1").get<long>();
    rec.h_neg2 = j.at("h_neg2").get<long>();
    rec.h_pos = j.at("h_pos").get<long>();
    rec.psi_omega = int_from_json(j.at("psi_omega"));
    rec.theta = int_from_json(j.at("theta"));
    rec.H = int_from_json(j.at("H"));
    rec.holds_mod8 = j.at("holds_mod8").get<bool>();
    rec.unit_x = int_from_json(j.at("unit_x"));
    rec.unit_y = int_from_json(j.at("unit_y"));
    return rec;
}

} // namespace

std::string record_to_json(CongruenceRecord const & rec)
{
    return record_json(rec).dump();
}

std::optional<CongruenceRecord> record_from_json(std::string const & line)
{
    try {
        return record_from(json::parse(line));
    } catch (std::exception const &) {
        return std::nullopt;
    }
}

std::string cache_line(CongruenceRecord const & rec)
{
    json j = record_json(rec);
    j["checksum"] = hex64(fnv1a(j.dump()));
    return j.dump();
}

std::optional<CongruenceRecord> parse_cache_line(std::string const & line)
{
    try {
        json j = json::parse(line);
        if (!j.is_object() || !j.contains("checksum"))
            return std::nullopt;
        std::string checksum = j.at("checksum").get<std::string>();
        j.erase("checksum");
        if (hex64(fnv1a(j.dump())) != checksum)
            return std::nullopt;
        auto rec = record_from(j);
        // The stored form must be canonical, so the checksum covers every field.
        if (record_json(rec).dump() != j.dump())
            return std::nullopt;
        return rec;
    } catch (std::exception const &) {
        return std::nullopt;
    }
}

std::vector<CongruenceRecord> cached_records(std::vector<RecordKey> const & keys, unsigned jobs,
                                             std::optional<std::string> const & cache_path,
                                             CacheStats * stats)
{
    CacheStats local;
    std::map<RecordKey, CongruenceRecord> cache;
    if (cache_path) {
        std::ifstream in(*cache_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            if (auto rec = parse_cache_line(line))
                cache[RecordKey{rec->p1, rec->p2, rec->f}] = *rec;
            else
                ++local.corrupt;
        }
    }

    std::vector<RecordKey> missing;
    for (auto const & key : keys) {
        if (cache.count(key))
            ++local.hits;
        else
            missing.push_back(key);
    }
    auto fresh = compute_records(missing, jobs);
    local.computed = fresh.size();
    for (auto & rec : fresh)
        cache[RecordKey{rec.p1, rec.p2, rec.f}] = std::move(rec);

    if (cache_path && (local.computed > 0 || local.corrupt > 0)) {
        // Single writer: rewrite through a temporary file, sorted by key.
        std::string tmp = *cache_path + ".tmp";
        {
            std::ofstream os(tmp, std::ios::trunc);
            if (!os)
                throw std::runtime_error("cannot write cache file " + tmp);
            for (auto const & [key, rec] : cache)
                os << cache_line(rec) << '\n';
        }
        std::filesystem::rename(tmp, *cache_path);
    }

    std::vector<CongruenceRecord> out;
    out.reserve(keys.size());
    for (auto const & key : keys)
        out.push_back(cache.at(key));
    if (stats)
        *stats = local;
    return out;
}

long max_bound()
{
    if (char const * env = std::getenv("QUADCONG_MAX_BOUND")) {
        char * end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 1000000;
}

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string format = "text";
    std::optional<std::string> cache;
    unsigned jobs = 1;
};

std::string csv_cell(json const & v)
{
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? " " : "") + csv_cell(v[i]);
    } else
        s = v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : s)
            quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        return quoted + "\"";
    }
    return s;
}

std::string text_cell(json const & v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + text_cell(v[i]);
        return s + "]";
    }
    return v.dump();
}

void emit_csv(std::ostream & out, json const & rows)
{
    if (rows.empty())
        return;
    bool first = true;
    for (auto const & [key, value] : rows.front().items()) {
        out << (first ? "" : ",") << key;
        first = false;
    }
    out << '\n';
    for (auto const & row : rows) {
        first = true;
        for (auto const & [key, value] : row.items()) {
            out << (first ? "" : ",") << csv_cell(value);
            first = false;
        }
        out << '\n';
    }
}

// Single object: key=value pairs on one line.
void emit_pairs(std::ostream & out, json const & obj)
{
    bool first = true;
    for (auto const & [key, value] : obj.items()) {
        out << (first ? "" : " ") << key << '=' << text_cell(value);
        first = false;
    }
    out << '\n';
}

// Rows as right-aligned columns.
void emit_columns(std::ostream & out, json const & rows)
{
    if (rows.empty())
        return;
    std::vector<std::string> header;
    for (auto const & [key, value] : rows.front().items())
        header.push_back(key);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c)
        width[c] = header[c].size();
    for (auto const & row : rows) {
        std::vector<std::string> line;
        for (auto const & [key, value] : row.items())
            line.push_back(text_cell(value));
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());
        cells.push_back(std::move(line));
    }
    auto print = [&](std::vector<std::string> const & line) {
        for (std::size_t c = 0; c < line.size(); ++c)
            out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << line[c];
        out << '\n';
    };
    print(header);
    for (auto const & line : cells)
        print(line);
}

void emit_object(std::ostream & out, Options const & opt, json const & obj)
{
    if (opt.format == "json")
        out << obj.dump(2) << '\n';
    else if (opt.format == "csv")
        emit_csv(out, json::array({obj}));
    else
        emit_pairs(out, obj);
}

void emit_rows(std::ostream & out, Options const & opt, json const & rows)
{
    if (opt.format == "json")
        out << rows.dump(2) << '\n';
    else if (opt.format == "csv")
        emit_csv(out, rows);
    else
        emit_columns(out, rows);
}

json int_list(std::vector<Int> const & v)
{
    json a = json::array();
    for (auto const & x : v)
        a.push_back(json_int(x));
    return a;
}

void require_within_cap(Int const & largest_delta)
{
    long cap = max_bound();
    if (abs(largest_delta) > cap)
        throw UsageError("scan would reach |delta| = " + largest_delta.get_str()
                         + ", above QUADCONG_MAX_BOUND = " + std::to_string(cap));
}

std::vector<int> conductor_set(std::string const & f)
{
    if (f == "1")
        return {1};
    if (f == "2")
        return {2};
    return {1, 2};
}

// ---- single-value commands ----

int cmd_cf(std::ostream & out, Options const & opt, std::string const & delta_s,
           std::vector<std::string> const & ab)
{
    auto disc = make_discriminant(parse_int(delta_s, "delta"));
    if (disc.delta <= 0)
        throw std::invalid_argument("cf: discriminant must be positive");
    if (!ab.empty() && ab.size() != 2)
        throw UsageError("cf: give both a and b, or neither");
    QuadraticIrrational xi = ab.empty()
                                 ? omega(disc)
                                 : QuadraticIrrational(parse_int(ab[0], "a"), parse_int(ab[1], "b"), disc);
    auto cf = cf_expand(xi);
    json j;
    j["delta"] = json_int(disc.delta);
    j["a"] = json_int(xi.a());
    j["b"] = json_int(xi.b());
    j["preperiod"] = int_list(cf.preperiod);
    j["period"] = int_list(cf.period);
    j["k"] = cf.k();
    j["l"] = cf.l();
    j["psi"] = json_int(hirzebruch_sum(cf));
    if (opt.format == "text") {
        for (auto const & [key, value] : j.items())
            out << key << '=' << text_cell(value) << '\n';
        return kPass;
    }
    emit_object(out, opt, j);
    return kPass;
}

int cmd_dedekind(std::ostream & out, Options const & opt, std::string const & h_s,
                 std::string const & k_s)
{
    Int h = parse_int(h_s, "h");
    Int k = parse_int(k_s, "k");
    Rational s = dedekind_sum(h, k);
    if (opt.format == "text") {
        out << "s(" << h << ',' << k << ")=" << s.get_str() << '\n';
        return kPass;
    }
    json j;
    j["h"] = json_int(h);
    j["k"] = json_int(k);
    j["s"] = s.get_str();
    j["six_k_s"] = json_int(Rational(6 * k * s).get_num());
    emit_object(out, opt, j);
    return kPass;
}

int cmd_unit(std::ostream & out, Options const & opt, std::string const & delta_s)
{
    auto disc = make_discriminant(parse_int(delta_s, "delta"));
    auto e = fundamental_unit(disc);
    json j;
    j["t"] = json_int(e.t);
    j["u"] = json_int(e.u);
    j["q"] = json_int(e.q);
    j["r"] = json_int(e.r);
    j["norm"] = e.norm > 0 ? "+1" : "-1";
    emit_object(out, opt, j);
    return kPass;
}

int cmd_classnum(std::ostream & out, Options const & opt, std::string const & delta_s)
{
    auto disc = make_discriminant(parse_int(delta_s, "delta"));
    json j;
    j["delta"] = json_int(disc.delta);
    if (disc.delta < 0) {
        j["h"] = class_number_negative(disc);
    } else {
        auto cs = class_structure(disc);
        j["h"] = cs.h;
        j["h_plus"] = cs.h_plus;
    }
    if (opt.format == "text") {
        j.erase("delta");
    }
    emit_object(out, opt, j);
    return kPass;
}

int cmd_theta(std::ostream & out, Options const & opt, std::vector<std::string> const & args)
{
    Int value = theta(parse_int(args[0], "d1"), parse_int(args[1], "d2"), parse_int(args[2], "f"));
    json j;
    j["theta"] = json_int(value);
    emit_object(out, opt, j);
    return kPass;
}

json kmz_json(KmzReport const & r)
{
    json j;
    j["d1"] = json_int(r.d1);
    j["d2"] = json_int(r.d2);
    j["f"] = json_int(r.f);
    j["lhs"] = r.lhs.get_den() == 1 ? json_int(r.lhs.get_num()) : json(r.lhs.get_str());
    j["rhs_reduced"] = json_int(r.rhs_reduced);
    j["rhs_classes"] = json_int(r.rhs_classes);
    j["unit_norm"] = r.unit_norm;
    j["equal"] = r.equal;
    return j;
}

int cmd_kmz(std::ostream & out, Options const & opt, std::vector<std::string> const & args)
{
    auto report = verify_kmz(parse_int(args[0], "d1"), parse_int(args[1], "d2"),
                             parse_int(args[2], "f"));
    if (opt.format == "text") {
        out << "lhs=" << report.lhs.get_str();
        if (report.rhs_reduced == report.rhs_classes)
            out << " rhs=" << report.rhs_reduced;
        else
            out << " rhs_reduced=" << report.rhs_reduced << " rhs_classes=" << report.rhs_classes;
        out << " equal=" << (report.equal ? "true" : "false") << '\n';
    } else {
        emit_object(out, opt, kmz_json(report));
    }
    return report.equal ? kPass : kVerificationFailure;
}

// ---- tables ----

struct TableSpec {
    long class_number;
    long bound;
    char const * title;
};

TableSpec table_spec(std::string const & which)
{
    if (which == "a1")
        return {1, 161, "Table A1: h(p1p2) = 1, p1p2 <= 161"};
    if (which == "a2")
        return {3, 1509, "Table A2: h(p1p2) = 3, p1p2 <= 1509"};
    if (which == "a3")
        return {5, 3997, "Table A3: h(p1p2) = 5, p1p2 <= 3997"};
    throw UsageError("table: expected a1, a2 or a3, got '" + which + "'");
}

std::string delta_label(CongruenceRecord const & rec)
{
    std::string pq = std::to_string(rec.p1 * rec.p2);
    if (rec.f == 1)
        return pq + "=" + std::to_string(rec.p1) + "·" + std::to_string(rec.p2);
    return pq + "·" + std::to_string(rec.f) + "^2";
}

int cmd_table(std::ostream & out, Options const & opt, std::string const & which)
{
    auto spec = table_spec(which);
    auto records = cached_records(scan_keys(spec.bound, {1, 2}), opt.jobs, opt.cache);
    std::vector<CongruenceRecord> rows;
    for (std::size_t i = 0; i + 1 < records.size(); i += 2) {
        if (records[i].h_pos != spec.class_number)
            continue;
        rows.push_back(records[i]);
        rows.push_back(records[i + 1]);
    }

    if (opt.format == "text") {
        out << spec.title << '\n';
        out << "Delta | Psi(omega) | (x,y) | h(Delta),h(-p1),h(-p2) | theta(f) | H(f)\n";
        for (auto const & r : rows) {
            std::string unit = r.f == 1 ? "(" + r.unit_x.get_str() + "," + r.unit_y.get_str() + ")"
                                        : "";
            out << delta_label(r) << " | " << r.psi_omega << " | " << unit << " | " << r.h_pos
                << ',' << r.h_neg1 << ',' << r.h_neg2 << " | " << r.theta << " | "
                << factorization_string(r.H, true) << '\n';
        }
        return kPass;
    }
    json arr = json::array();
    for (auto const & r : rows) {
        json j;
        j["delta"] = json_int(r.delta);
        j["p1"] = r.p1;
        j["p2"] = r.p2;
        j["f"] = r.f;
        j["psi_omega"] = json_int(r.psi_omega);
        j["x"] = json_int(r.unit_x);
        j["y"] = json_int(r.unit_y);
        j["h_pos"] = r.h_pos;
        j["h_neg1"] = r.h_neg1;
        j["h_neg2"] = r.h_neg2;
        j["theta"] = json_int(r.theta);
        j["H"] = json_int(r.H);
        j["H_factored"] = factorization_string(r.H, false);
        arr.push_back(std::move(j));
    }
    emit_rows(out, opt, arr);
    return kPass;
}

int cmd_scan(std::ostream & out, Options const & opt, long bound, std::string const & f)
{
    auto fs = conductor_set(f);
    require_within_cap(Int(bound) * (fs.back() * fs.back()));
    auto records = cached_records(scan_keys(bound, fs), opt.jobs, opt.cache);
    json arr = json::array();
    for (auto const & r : records) {
        json j = record_json(r);
        j.erase("unit_x");
        j.erase("unit_y");
        arr.push_back(std::move(j));
    }
    if (arr.empty() && opt.format == "text") {
        out << "0 pairs\n";
        return kPass;
    }
    emit_rows(out, opt, arr);
    return kPass;
}

// ---- verification ----

struct Tally {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string unit = "pairs";
};

void report_tally(std::ostream & out, Tally const & t)
{
    out << t.name << ": " << t.checked << ' ' << t.unit << ", " << t.failed << " failures\n";
}

Tally verify_h_records(std::ostream & out, Options const & opt, long bound, int f)
{
    Tally t{f == 1 ? "thm13" : "thm14"};
    auto keys = scan_keys(bound, {f});
    std::vector<CongruenceRecord> records;
    try {
        records = cached_records(keys, opt.jobs, opt.cache);
    } catch (std::logic_error const & e) {
        out << "FAIL " << e.what() << '\n';
        t.checked = keys.size();
        t.failed = 1;
        return t;
    }
    for (auto const & r : records) {
        ++t.checked;
        bool ok = r.holds_mod8 && mpz_divisible_ui_p(r.psi_omega.get_mpz_t(), r.n)
                  && (r.h_neg1 * r.h_neg2) % 2 == 1;
        if (!ok) {
            ++t.failed;
            out << "FAIL " << record_to_json(r) << '\n';
        }
    }
    return t;
}

Tally verify_prime_mod16(std::ostream & out, long bound, bool three_mod_four)
{
    Tally t{three_mod_four ? "thm11" : "thm12"};
    t.unit = "primes";
    for (auto p64 : primes_up_to(static_cast<std::uint64_t>(std::max(bound, 0L)))) {
        long p = static_cast<long>(p64);
        bool ok;
        if (three_mod_four) {
            if (p % 4 != 3 || p <= 3)
                continue;
            ok = verify_theorem_1_1(p);
        } else {
            if (p % 4 != 1)
                continue;
            ok = verify_theorem_1_2(p);
        }
        ++t.checked;
        if (!ok) {
            ++t.failed;
            out << "FAIL " << t.name << " p=" << p << '\n';
        }
    }
    return t;
}

Tally verify_kmz_range(std::ostream & out, long bound)
{
    Tally t{"kmz"};
    t.unit = "triples";
    std::vector<long> fundamentals;
    for (long d = -3; d >= -bound / 3; --d) {
        if (is_fundamental(Int(d)))
            fundamentals.push_back(d);
    }
    for (long d1 : fundamentals) {
        for (long d2 : fundamentals) {
            if (d1 == d2 || d1 * d2 > bound)
                continue;
            for (long f = 1; d1 * d2 * f * f <= bound; ++f) {
                auto r = verify_kmz(Int(d1), Int(d2), Int(f));
                ++t.checked;
                if (!r.equal) {
                    ++t.failed;
                    out << "FAIL " << kmz_json(r).dump() << '\n';
                }
            }
        }
    }
    return t;
}

Tally verify_lemmas(std::ostream & out, long bound, std::vector<int> const & fs)
{
    Tally t{"lemmas"};
    for (auto const & [p1, p2] : scan_pairs(bound)) {
        ++t.checked;
        bool ok = true;
        auto units = check_unit_lemmas(p1, p2);
        for (auto const & clause : units.failures) {
            out << "FAIL (" << p1 << "," << p2 << ") " << clause << '\n';
            ok = false;
        }
        for (int f : fs) {
            if (!check_class_term_congruence(p1, p2, f)) {
                out << "FAIL (" << p1 << "," << p2 << ") f=" << f << " class term congruence\n";
                ok = false;
            }
            if (!check_inverse_pairing(p1, p2, f)) {
                out << "FAIL (" << p1 << "," << p2 << ") f=" << f << " inverse pairing\n";
                ok = false;
            }
        }
        if (!ok)
            ++t.failed;
    }
    return t;
}

int cmd_verify(std::ostream & out, Options const & opt, long bound, std::string const & f,
               std::string const & mode)
{
    auto fs = conductor_set(f);
    bool all = mode == "all";
    Int reach = 0;
    auto need = [&](Int const & d) { reach = std::max(reach, d); };
    if (all || mode == "thm13")
        need(Int(bound));
    if (all || mode == "thm14" || mode == "thm11")
        need(4 * Int(bound));
    if (all || mode == "thm12")
        need(16 * Int(bound));
    if (all || mode == "kmz")
        need(Int(bound));
    if (all || mode == "lemmas")
        need(4 * Int(bound));
    require_within_cap(reach);

    std::vector<Tally> tallies;
    if (all || mode == "thm13")
        tallies.push_back(verify_h_records(out, opt, bound, 1));
    if (all || mode == "thm14")
        tallies.push_back(verify_h_records(out, opt, bound, 2));
    if (all || mode == "thm11")
        tallies.push_back(verify_prime_mod16(out, bound, true));
    if (all || mode == "thm12")
        tallies.push_back(verify_prime_mod16(out, bound, false));
    if (all || mode == "kmz")
        tallies.push_back(verify_kmz_range(out, bound));
    if (all || mode == "lemmas")
        tallies.push_back(verify_lemmas(out, bound, fs));

    bool failed = false;
    for (auto const & t : tallies) {
        report_tally(out, t);
        failed = failed || t.failed > 0;
    }
    return failed ? kVerificationFailure : kPass;
}

} // namespace

int run(std::vector<std::string> args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Exact class numbers, Hirzebruch sums and class number congruences",
                 "quadcong"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--cache", opt.cache, "Record cache file (JSON lines)");
    app.add_option("--jobs", opt.jobs, "Worker threads for scans")->check(CLI::PositiveNumber);

    std::string delta_s, h_s, k_s, which = "a1", f_set = "both", mode = "all";
    std::vector<std::string> ab, triple;
    long bound = 0;

    auto * cf = app.add_subcommand("cf", "Continued fraction and Hirzebruch sum");
    cf->add_option("delta", delta_s, "Positive discriminant")->required();
    cf->add_option("ab", ab, "Optional a b for (b + sqrt(delta))/(2a)")->expected(0, 2);

    auto * dk = app.add_subcommand("dedekind", "Dedekind sum s(h, k)");
    dk->add_option("numerator", h_s, "h")->required();
    dk->add_option("denominator", k_s, "k > 0")->required();

    auto * un = app.add_subcommand("unit", "Fundamental unit of O_delta");
    un->add_option("delta", delta_s)->required();

    auto * cn = app.add_subcommand("classnum", "Wide class number of O_delta");
    cn->add_option("delta", delta_s)->required();

    auto * th = app.add_subcommand("theta", "Conductor Euler factor theta(d1, d2, f)");
    th->add_option("args", triple, "d1 d2 f")->expected(3)->required();

    auto * km = app.add_subcommand("kmz", "Check the class number identity for (d1, d2, f)");
    km->add_option("args", triple, "d1 d2 f")->expected(3)->required();

    auto * ve = app.add_subcommand("verify", "Verify congruences and identities up to a bound");
    ve->add_option("--bound", bound, "Bound on p1 p2 (or |delta| for kmz)")->required();
    ve->add_option("--f", f_set, "Conductors")->check(CLI::IsMember({"1", "2", "both"}));
    ve->add_option("--mode", mode)->check(
        CLI::IsMember({"thm13", "thm14", "thm11", "thm12", "kmz", "lemmas", "all"}));

    auto * ta = app.add_subcommand("table", "Regenerate a reference table (a1, a2, a3)");
    ta->add_option("which", which)->required()->check(CLI::IsMember({"a1", "a2", "a3"}));

    auto * sc = app.add_subcommand("scan", "Congruence records for all pairs up to a bound");
    sc->add_option("--bound", bound, "Bound on p1 p2")->required();
    sc->add_option("--f", f_set, "Conductors")->check(CLI::IsMember({"1", "2", "both"}));

    for (auto * sub : {cf, dk, un, cn, th, km})
        sub->positionals_at_end(false);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return kPass;
    } catch (CLI::ParseError const & e) {
        err << "quadcong: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (cf->parsed())
            return cmd_cf(out, opt, delta_s, ab);
        if (dk->parsed())
            return cmd_dedekind(out, opt, h_s, k_s);
        if (un->parsed())
            return cmd_unit(out, opt, delta_s);
        if (cn->parsed())
            return cmd_classnum(out, opt, delta_s);
        if (th->parsed())
            return cmd_theta(out, opt, triple);
        if (km->parsed())
            return cmd_kmz(out, opt, triple);
        if (ve->parsed())
            return cmd_verify(out, opt, bound, f_set, mode);
        if (ta->parsed())
            return cmd_table(out, opt, which);
        if (sc->parsed())
            return cmd_scan(out, opt, bound, f_set);
    } catch (std::invalid_argument const & e) {
        err << "quadcong: " << e.what() << '\n';
        return kUsageError;
    } catch (std::domain_error const & e) {
        err << "quadcong: " << e.what() << '\n';
        return kUsageError;
    } catch (std::exception const & e) {
        err << "quadcong: " << e.what() << '\n';
        return kVerificationFailure;
    }
    return kUsageError;
}

} // namespace quadcong::cli
