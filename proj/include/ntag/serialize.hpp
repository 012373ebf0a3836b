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

#ifndef NTAG_SERIALIZE_HPP
#define NTAG_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "ntag/autgroup.hpp"
#include "ntag/codes.hpp"
#include "ntag/curve.hpp"
#include "ntag/sepcurve.hpp"

namespace ntag {

using Json = nlohmann::ordered_json;

/// {p, k, modulus: [c_0..c_k], generator_index}
Json to_json(const Field& f);
/// {q, r, field}
Json to_json(const NormTraceCurve& curve);

/// {"kind": "infinity"} or {"x": i, "y": j}
Json to_json(const Place& p);
Place place_from_json(const Json& j);
Json to_json(const std::vector<Place>& places);
std::vector<Place> places_from_json(const Json& j);

/// [{place, coefficient}, ...]
Json to_json(const Divisor& d);
Divisor divisor_from_json(const Json& j);

Json to_json(const MonomialTerm& t);
Json to_json(const std::vector<MonomialTerm>& basis);
/// [{coefficient_index, i, j}, ...]
Json to_json(const FunctionElem& f);

/// {q, r, ell, extended, n, k, d_star, d_exact?, basis, matrix}
Json code_report(const AGCode& code);
/// One line per row, comma-separated element indices.
std::string matrix_csv(const Matrix& m);

/// {a_index, b_index, frob, scalar_index}
Json to_json(const CodeAut& g);
CodeAut code_aut_from_json(const Json& j);
Json orbits_to_json(const std::vector<std::vector<Place>>& orbits);

/**
 * Separated-curve spec file:
 *   {"p": 2, "field": {"k": 1} | {"order": 4}, "modulus": [..]?,
 *    "A": [{"j": 0, "a": 1}, ...] | "A_poly": [c_0, c_1, ...],
 *    "B": [b_0, ..., b_m]}
 * "field" defaults to GF(p).
 */
SeparatedCurveSpec spec_from_json(const Json& j);
Json to_json(const SeparatedCurveSpec& spec);
/// Throws std::runtime_error naming the path when it cannot be read or parsed.
SeparatedCurveSpec load_spec_file(const std::string& path);

Json to_json(const AffineMap& s);
Json to_json(const ClassificationResult& r);

}  // namespace ntag

#endif
