/*
   Copyright 2026 The ntag Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ntag/cli.hpp"

#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ntag/autgroup.hpp"
#include "ntag/codes.hpp"
#include "ntag/curve.hpp"
#include "ntag/rrspace.hpp"
#include "ntag/sepcurve.hpp"
#include "ntag/serialize.hpp"

namespace ntag::cli {

namespace {

enum class Format { Csv, Json, Text };

struct Config {
    std::uint32_t q = 0;
    std::uint32_t r = 0;
    long long ell = 0;
    long long ell_max = 0;
    bool extended = false;
    std::string spec;
    std::string search_field;
    Format format = Format::Csv;
    std::uint64_t budget = 1ull << 24;
    std::uint64_t max_field_order = ntag::max_field_order;
    unsigned seed = 1;
    unsigned threads = 0;
};

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    Json report;
    bool table = false;
    bool passed = true;
    std::string raw;  // preformatted output overriding report
};

std::uint64_t saturating_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (b != 0 && r > UINT64_MAX / b) return UINT64_MAX;
        r *= b;
    }
    return r;
}

std::string text_of(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_cell(const Json& v) {
    std::string s = text_of(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

void emit(const Outcome& o, Format f, std::ostream& os) {
    if (!o.raw.empty()) {
        os << o.raw;
        return;
    }
    if (f == Format::Json) {
        os << o.report.dump(2) << '\n';
        return;
    }
    const char* sep = f == Format::Csv ? "," : " ";
    if (o.table) {
        if (o.report.empty()) return;
        bool first = true;
        for (const auto& [k, v] : o.report.front().items()) {
            os << (first ? "" : sep) << k;
            first = false;
        }
        os << '\n';
        for (const auto& row : o.report) {
            first = true;
            for (const auto& [k, v] : row.items()) {
                os << (first ? "" : sep) << (f == Format::Csv ? csv_cell(v) : text_of(v));
                first = false;
            }
            os << '\n';
        }
        return;
    }
    if (f == Format::Csv) os << "key,value\n";
    for (const auto& [k, v] : o.report.items()) {
        if (f == Format::Csv)
            os << k << ',' << csv_cell(v) << '\n';
        else
            os << k << ": " << text_of(v) << '\n';
    }
}

NormTraceCurve make_curve(const Config& c) {
    if (c.q == 0 || c.r == 0) throw UsageError("--q and --r are required");
    if (saturating_pow(c.q, c.r) > c.max_field_order)
        throw UsageError("field order q^r exceeds --max-field-order " + std::to_string(c.max_field_order));
    try {
        return NormTraceCurve(c.q, c.r);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Outcome field_info(const Config& c) {
    if (c.q == 0) throw UsageError("--q (field order) is required");
    if (c.q > c.max_field_order) throw UsageError("field order exceeds --max-field-order");
    const auto pk = prime_power(c.q);
    if (!pk) throw UsageError("--q must be a prime power");
    const FieldPtr f = Field::build(pk->first, pk->second);
    Json j = to_json(*f);
    j["order"] = f->order();
    j["modulus_encoding"] = f->modulus_encoding();
    j["description"] = f->describe();
    Outcome o;
    o.report = std::move(j);
    return o;
}

Outcome curve_info(const Config& c) {
    const NormTraceCurve curve = make_curve(c);
    const auto g = static_cast<long long>(curve.genus());
    Json j{{"q", curve.q()},
           {"r", curve.r()},
           {"field_order", curve.field_order()},
           {"c", curve.c()},
           {"h", curve.h()},
           {"genus", curve.genus()},
           {"places", curve.rational_places().size()},
           {"omega", curve.omega().size()},
           {"theta", curve.theta().size()},
           {"divisor_x", to_json(curve.principal_divisor_x())},
           {"divisor_y", to_json(curve.principal_divisor_y())},
           {"nongaps_to_2g", semigroup_nongaps(curve, 2 * g)},
           {"gap_count", semigroup_gaps(curve).size()}};
    Outcome o;
    o.report = std::move(j);
    return o;
}

std::pair<long long, long long> ell_range(const Config& c, const NormTraceCurve& curve) {
    const long long top = static_cast<long long>(curve.field_order()) - 1;
    long long lo = c.ell ? c.ell : 1;
    long long hi = c.ell_max ? c.ell_max : (c.ell ? c.ell : top);
    if (lo < 1 || hi > top || lo > hi)
        throw UsageError("ell range must satisfy 1 <= ell <= ell-max <= " + std::to_string(top));
    return {lo, hi};
}

Outcome code_table(const Config& c, std::ostream& err) {
    const NormTraceCurve curve = make_curve(c);
    const auto [lo, hi] = ell_range(c, curve);
    Outcome o;
    o.table = true;
    o.report = Json::array();
    for (long long l = lo; l <= hi; ++l) {
        err << "code-table: ell=" << l << '\n';
        AGCode code = build_code(curve, l);
        const long long formula = dimension_closed_form(curve.q(), curve.r(), l);
        Json row{{"ell", l},
                 {"n", code.n},
                 {"k_rank", code.k},
                 {"k_formula", formula},
                 {"k_lattice", code.basis.size()},
                 {"d_star", code.d_star}};
        if (saturating_pow(curve.field_order(), code.k) <= c.budget) {
            const auto res = min_distance_exhaustive(code, c.budget, true, c.threads);
            row["d_exact"] = res.weight;
            if (static_cast<long long>(res.weight) < code.d_star) o.passed = false;
        } else {
            row["d_exact"] = "";
        }
        const bool agree = static_cast<long long>(code.k) == formula && code.k == code.basis.size();
        row["formulas_agree"] = agree;
        if (!agree) o.passed = false;
        o.report.push_back(std::move(row));
    }
    return o;
}

Outcome code_build(const Config& c) {
    const NormTraceCurve curve = make_curve(c);
    if (!c.ell) throw UsageError("--ell is required");
    ell_range(c, curve);
    const AGCode code = c.extended ? extended_one_point_code(curve, c.ell) : build_code(curve, c.ell);
    Outcome o;
    if (c.format == Format::Csv) {
        o.raw = matrix_csv(code.generator);
        return o;
    }
    o.report = code_report(code);
    if (c.format == Format::Text) {
        std::ostringstream os;
        os << "q: " << curve.q() << "\nr: " << curve.r() << "\nell: " << code.ell
           << "\nextended: " << (code.extended ? "true" : "false") << "\nn: " << code.n << "\nk: " << code.k
           << "\nd_star: " << code.d_star << "\nbasis:";
        for (const auto& t : code.basis) os << " x^" << t.i << "y^" << t.j;
        os << "\nmatrix:\n" << matrix_csv(code.generator);
        o.raw = os.str();
    }
    return o;
}

Outcome min_dist(const Config& c, std::ostream& err) {
    const NormTraceCurve curve = make_curve(c);
    if (!c.ell) throw UsageError("--ell is required");
    ell_range(c, curve);
    AGCode code = c.extended ? extended_one_point_code(curve, c.ell) : build_code(curve, c.ell);
    err << "min-dist: enumerating " << code.k << "-dimensional code over GF(" << curve.field_order() << ")\n";
    const auto res = min_distance_exhaustive(code, c.budget, false, c.threads);
    Outcome o;
    o.report = Json{{"q", curve.q()},           {"r", curve.r()},
                    {"ell", code.ell},          {"extended", code.extended},
                    {"n", code.n},              {"k", code.k},
                    {"d_star", code.d_star},    {"d_exact", res.weight},
                    {"examined", res.examined}, {"message", res.message},
                    {"attains_d_star", static_cast<long long>(res.weight) == code.d_star}};
    o.passed = static_cast<long long>(res.weight) >= code.d_star;
    return o;
}

Outcome aut_verify(const Config& c, std::ostream& err) {
    const NormTraceCurve curve = make_curve(c);
    const Field& f = curve.field();
    const long long l = c.ell ? c.ell : 1;
    const long long top = static_cast<long long>(curve.field_order()) - 1;
    if (l < 1 || l > top) throw UsageError("ell must lie in 1.." + std::to_string(top));

    const auto group = enumerate_group(curve);
    const std::uint64_t expected = curve.h() * (curve.field_order() - 1);
    Outcome o;
    Json j{{"q", curve.q()}, {"r", curve.r()}, {"ell", l}, {"group_order", group.size()},
           {"expected_order", expected}};
    bool ok = group.size() == expected;
    j["order_check"] = ok;

    bool closed = true;
    if (group.size() <= 400) {
        err << "aut-verify: closure over " << group.size() << "^2 pairs\n";
        const std::set<CurveAut> set(group.begin(), group.end());
        for (const auto& s : group) {
            if (!set.count(inverse(curve, s))) closed = false;
            for (const auto& t : group)
                if (!set.count(compose(curve, s, t))) closed = false;
        }
        j["closure_check"] = closed;
    } else {
        j["closure_check"] = "skipped";
    }

    std::vector<std::size_t> sizes;
    for (const auto& orb : short_orbits(curve)) sizes.push_back(orb.size());
    std::sort(sizes.begin(), sizes.end());
    const bool orbits_ok = sizes == std::vector<std::size_t>{1, static_cast<std::size_t>(curve.h())};
    j["short_orbit_sizes"] = sizes;
    j["orbit_check"] = orbits_ok;

    std::size_t max_fixed = 0;
    for (const auto& s : group)
        if (!s.is_identity()) max_fixed = std::max(max_fixed, fixed_place_count(curve, s));
    const bool fixed_ok = max_fixed <= curve.h() + 1;
    j["max_fixed_places"] = max_fixed;
    j["fixed_point_check"] = fixed_ok;

    err << "aut-verify: code invariance at ell=" << l << '\n';
    const AGCode code = build_code(curve, l);
    const Echelon rows = echelon(code.generator);
    auto holds = [&](const CodeAut& g) { return is_code_automorphism(code, rows, g); };
    bool translations = true, scalings = true, frobenius = true, scalars = true, combined = true;
    for (const auto& s : group) {
        if (s.b == 1 && !holds({s, 0, 1})) translations = false;
        if (s.a == 0 && !holds({s, 0, 1})) scalings = false;
    }
    for (std::uint32_t e = 0; e < f.k(); ++e)
        if (!holds({CurveAut::identity(), e, 1})) frobenius = false;
    for (Index v = 1; v < f.order(); ++v)
        if (!holds({CurveAut::identity(), 0, v})) scalars = false;
    const std::uint64_t full = group.size() * f.k() * (f.order() - 1);
    std::uint64_t checked = 0;
    if (full <= 5000) {
        for (const auto& s : group)
            for (std::uint32_t e = 0; e < f.k(); ++e)
                for (Index v = 1; v < f.order(); ++v, ++checked)
                    if (!holds({s, e, v})) combined = false;
    } else {
        std::mt19937 rng(c.seed);
        std::uniform_int_distribution<std::size_t> gi(0, group.size() - 1);
        std::uniform_int_distribution<std::uint32_t> ei(0, f.k() - 1);
        std::uniform_int_distribution<Index> vi(1, f.order() - 1);
        for (; checked < 256; ++checked)
            if (!holds({group[gi(rng)], ei(rng), vi(rng)})) combined = false;
    }
    j["translations_preserve_code"] = translations;
    j["scalings_preserve_code"] = scalings;
    j["frobenius_preserves_code"] = frobenius;
    j["scalars_preserve_code"] = scalars;
    j["combined_checked"] = checked;
    j["combined_preserve_code"] = combined;
    o.passed = ok && closed && orbits_ok && fixed_ok && translations && scalings && frobenius && scalars && combined;
    j["all_checks_pass"] = o.passed;
    o.report = std::move(j);
    return o;
}

Outcome classify_cmd(const Config& c, std::ostream& err) {
    if (c.spec.empty()) throw UsageError("--spec is required");
    const SeparatedCurveSpec spec = load_spec_file(c.spec);
    validate(spec);
    const ClassificationResult cr = classify(spec);
    Outcome o;
    Json j{{"p", spec.p()},          {"n", spec.n()},
           {"m", spec.m()},          {"genus", genus(spec)},
           {"host_field_order", spec.field->order()}};
    const Json summary = to_json(cr);
    for (const auto& [k, v] : summary.items()) j[k] = v;
    if (cr.which == MonomialCase::NonMonomialB) {
        Json hb = Json::array();
        for (const auto& h : h_bound_from_roots(spec)) hb.push_back(h.describe());
        j["h_bounds"] = std::move(hb);
    }
    if (!c.search_field.empty()) {
        FieldPtr sf;
        if (c.search_field == "auto") {
            sf = recommended_search_field(spec);
        } else {
            std::uint64_t order = 0;
            try {
                order = std::stoull(c.search_field);
            } catch (const std::exception&) {
                throw UsageError("--search-field must be a field order or 'auto'");
            }
            if (order > c.max_field_order) throw UsageError("search field exceeds --max-field-order");
            const auto k = integer_log(order, spec.p());
            if (!k || *k < 1) throw UsageError("search field order must be a power of p");
            if (*k % spec.field->k() != 0) throw UsageError("search field must contain the host field");
            sf = Field::build(spec.p(), *k);
        }
        err << "classify: searching over GF(" << sf->order() << ")\n";
        const auto res = brute_force_stabilizer_search(spec, sf, c.budget, c.threads);
        const std::uint64_t found = res.maps.size();
        const std::uint64_t h = found / spec.a_degree();
        bool condiz = true;
        for (const auto& s : res.maps)
            if (!condiz_check(res.spec, s)) condiz = false;
        j["search_field_order"] = sf->order();
        j["maps_found"] = found;
        j["tame_part_order"] = h;
        j["is_group"] = true;
        j["condiz_holds"] = condiz;
        bool ok = condiz && found % spec.a_degree() == 0;
        if (cr.which == MonomialCase::NonMonomialB) {
            bool admitted = true;
            for (const auto& hc : h_bound_from_roots(spec))
                if (!hc.admits(h)) admitted = false;
            j["h_bounds_hold"] = admitted;
            ok = ok && admitted;
        } else {
            j["matches_prediction"] = found == cr.predicted_stabilizer_order;
            ok = ok && found == cr.predicted_stabilizer_order;
        }
        o.passed = ok;
    }
    o.report = std::move(j);
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Norm-trace curves, their AG codes and automorphisms", "ntag"};
    app.require_subcommand(1);
    Config cfg;
    std::string out_path;
    const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}, {"text", Format::Text}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--out", out_path, "Write data to this file instead of stdout");
        sub->add_option("--budget", cfg.budget, "Maximum enumeration count")->check(CLI::PositiveNumber);
        sub->add_option("--max-field-order", cfg.max_field_order, "Largest field accepted")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Seed for sampled checks");
        sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    };
    auto curve_opts = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "Subfield order q")->required();
        sub->add_option("--r", cfg.r, "Extension degree r")->required();
    };

    auto* field_cmd = app.add_subcommand("field-info", "Describe GF(q)");
    field_cmd->add_option("--q", cfg.q, "Field order")->required();
    auto* curve_cmd = app.add_subcommand("curve-info", "Genus, places and divisors of the curve");
    auto* table_cmd = app.add_subcommand("code-table", "Parameter table over a range of ell");
    table_cmd->add_option("--ell", cfg.ell, "First ell");
    table_cmd->add_option("--ell-max", cfg.ell_max, "Last ell");
    auto* build_cmd = app.add_subcommand("code-build", "Generator matrix of one code");
    auto* dist_cmd = app.add_subcommand("min-dist", "Exhaustive minimum distance");
    for (auto* s : {build_cmd, dist_cmd}) {
        s->add_option("--ell", cfg.ell, "Multiple of Omega")->required();
        s->add_flag("--extended", cfg.extended, "Use the extended one-point code");
    }
    auto* aut_cmd = app.add_subcommand("aut-verify", "Check the automorphism group and code invariance");
    aut_cmd->add_option("--ell", cfg.ell, "Code used for the invariance checks (default 1)");
    auto* cls_cmd = app.add_subcommand("classify", "Classify a separated curve from a spec file");
    cls_cmd->add_option("--spec", cfg.spec, "Spec file (JSON)")->required();
    cls_cmd->add_option("--search-field", cfg.search_field, "Order of the search field, or 'auto'");
    for (auto* s : {curve_cmd, table_cmd, build_cmd, dist_cmd, aut_cmd}) curve_opts(s);
    for (auto* s : {field_cmd, curve_cmd, table_cmd, build_cmd, dist_cmd, aut_cmd, cls_cmd}) common(s);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        Outcome o;
        if (*field_cmd) o = field_info(cfg);
        else if (*curve_cmd) o = curve_info(cfg);
        else if (*table_cmd) o = code_table(cfg, err);
        else if (*build_cmd) o = code_build(cfg);
        else if (*dist_cmd) o = min_dist(cfg, err);
        else if (*aut_cmd) o = aut_verify(cfg, err);
        else o = classify_cmd(cfg, err);

        if (out_path.empty()) {
            emit(o, cfg.format, out);
        } else {
            std::ofstream file(out_path);
            if (!file) throw std::runtime_error("cannot write " + out_path);
            emit(o, cfg.format, file);
        }
        if (!o.passed) err << "check failed\n";
        return o.passed ? exit_ok : exit_check_failed;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_error;
}

}  // namespace ntag::cli
