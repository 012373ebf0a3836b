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

#include "ntag/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ntag {

Json to_json(const Field& f) {
    return Json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}, {"generator_index", f.generator()}};
}

Json to_json(const NormTraceCurve& curve) {
    return Json{{"q", curve.q()}, {"r", curve.r()}, {"field", to_json(curve.field())}};
}

Json to_json(const Place& p) {
    if (p.at_infinity) return Json{{"kind", "infinity"}};
    return Json{{"x", p.x}, {"y", p.y}};
}

Place place_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("place must be an object");
    if (j.contains("kind")) {
        if (j.at("kind") != "infinity") throw std::invalid_argument("unknown place kind");
        return Place::infinity();
    }
    return Place::affine(j.at("x").get<Index>(), j.at("y").get<Index>());
}

Json to_json(const std::vector<Place>& places) {
    Json a = Json::array();
    for (const auto& p : places) a.push_back(to_json(p));
    return a;
}

std::vector<Place> places_from_json(const Json& j) {
    std::vector<Place> out;
    for (const auto& e : j) out.push_back(place_from_json(e));
    return out;
}

Json to_json(const Divisor& d) {
    Json a = Json::array();
    for (const auto& [p, c] : d.entries()) a.push_back(Json{{"place", to_json(p)}, {"coefficient", c}});
    return a;
}

Divisor divisor_from_json(const Json& j) {
    Divisor d;
    for (const auto& e : j) d.add(place_from_json(e.at("place")), e.at("coefficient").get<long long>());
    return d;
}

Json to_json(const MonomialTerm& t) { return Json{{"i", t.i}, {"j", t.j}}; }

Json to_json(const std::vector<MonomialTerm>& basis) {
    Json a = Json::array();
    for (const auto& t : basis) a.push_back(to_json(t));
    return a;
}

Json to_json(const FunctionElem& f) {
    Json a = Json::array();
    for (const auto& e : f.entries) a.push_back(Json{{"coefficient_index", e.coeff}, {"i", e.term.i}, {"j", e.term.j}});
    return a;
}

Json code_report(const AGCode& code) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < code.generator.rows(); ++i) {
        auto r = code.generator.row(i);
        rows.push_back(std::vector<Index>(r.begin(), r.end()));
    }
    Json j{{"q", code.curve->q()},   {"r", code.curve->r()}, {"ell", code.ell},
           {"extended", code.extended}, {"n", code.n},       {"k", code.k},
           {"d_star", code.d_star}};
    if (code.d_exact) j["d_exact"] = *code.d_exact;
    j["basis"] = to_json(code.basis);
    j["matrix"] = std::move(rows);
    return j;
}

std::string matrix_csv(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j);
        os << '\n';
    }
    return os.str();
}

Json to_json(const CodeAut& g) {
    return Json{{"a_index", g.aut.a}, {"b_index", g.aut.b}, {"frob", g.frob}, {"scalar_index", g.scalar}};
}

CodeAut code_aut_from_json(const Json& j) {
    CodeAut g;
    g.aut.a = j.at("a_index").get<Index>();
    g.aut.b = j.at("b_index").get<Index>();
    g.frob = j.value("frob", 0u);
    g.scalar = j.value("scalar_index", Index{1});
    return g;
}

Json orbits_to_json(const std::vector<std::vector<Place>>& orbits) {
    Json a = Json::array();
    for (const auto& o : orbits) a.push_back(to_json(o));
    return a;
}

SeparatedCurveSpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("spec must be a JSON object");
    const auto p = j.at("p").get<std::uint32_t>();
    std::uint32_t k = 1;
    if (j.contains("field")) {
        const Json& fj = j.at("field");
        if (fj.contains("k")) {
            k = fj.at("k").get<std::uint32_t>();
        } else if (fj.contains("order")) {
            auto log = integer_log(fj.at("order").get<std::uint64_t>(), p);
            if (!log) throw std::invalid_argument("field order is not a power of p");
            k = *log;
        }
        if (fj.contains("p") && fj.at("p").get<std::uint32_t>() != p)
            throw SpecError(SpecViolation::WrongCharacteristic, "field characteristic differs from p");
    }
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    FieldPtr f = Field::build(p, k, modulus);

    auto coeff = [&](const Json& v) {
        const auto c = v.get<long long>();
        if (c < 0 || c >= static_cast<long long>(f->order())) throw std::invalid_argument("coefficient outside the field");
        return static_cast<Index>(c);
    };
    std::vector<Index> b;
    for (const auto& v : j.at("B")) b.push_back(coeff(v));
    if (j.contains("A_poly")) {
        std::vector<Index> a;
        for (const auto& v : j.at("A_poly")) a.push_back(coeff(v));
        return spec_from_polynomials(f, Poly(*f, a), Poly(*f, b));
    }
    SeparatedCurveSpec s{f, {}, b};
    for (const auto& e : j.at("A")) {
        const Index v = coeff(e.at("a"));
        if (v != 0) s.a[e.at("j").get<std::uint32_t>()] = v;
    }
    return s;
}

Json to_json(const SeparatedCurveSpec& spec) {
    Json a = Json::array();
    for (const auto& [j, v] : spec.a) a.push_back(Json{{"j", j}, {"a", v}});
    return Json{{"p", spec.p()},
                {"field", Json{{"k", spec.field->k()}}},
                {"modulus", spec.field->modulus()},
                {"A", std::move(a)},
                {"B", spec.b}};
}

SeparatedCurveSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("cannot parse spec file " + path + ": " + e.what());
    }
    try {
        return spec_from_json(j);
    } catch (const Json::exception& e) {
        throw std::runtime_error("malformed spec file " + path + ": " + e.what());
    }
}

Json to_json(const AffineMap& s) { return Json{{"a", s.a}, {"b", s.b}, {"c", s.c}, {"q", s.q}}; }

Json to_json(const ClassificationResult& r) {
    Json j{{"case", to_string(r.which)}, {"d", r.d}};
    if (r.predicted_full_order)
        j["predicted_full_order"] = *r.predicted_full_order;
    else
        j["predicted_full_order"] = nullptr;
    j["predicted_stabilizer_order"] = r.predicted_stabilizer_order;
    j["shift"] = r.shift;
    j["generators"] = r.generators;
    j["notes"] = r.notes;
    return j;
}

}  // namespace ntag
