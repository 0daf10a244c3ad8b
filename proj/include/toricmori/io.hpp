#pragma once
// Text format for fans, divisors, maps and reports. Every artifact is a JSON
// object; integers that do not fit a machine word and all rationals are
// written as strings ("p/q").

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "toricmori/curves.hpp"
#include "toricmori/mmp.hpp"
#include "toricmori/newton.hpp"
#include "toricmori/sections.hpp"
#include "toricmori/singularities.hpp"

namespace toricmori::io {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);
Json vector_to_json(const RatVector& v);

Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);

Json divisor_to_json(const Divisor& d);
/// Accepts {"coeffs": [...]} or a bare list.
Divisor divisor_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, std::size_t cols);

/// Source and target are written inline.
Json map_to_json(const FanMap& m);
/// Source and target are inline objects or paths relative to `base_dir`.
FanMap map_from_json(const Json& j, const std::filesystem::path& base_dir);

Json read_json(const std::filesystem::path& p);
Fan read_fan(const std::filesystem::path& p);
Divisor read_divisor(const std::filesystem::path& p);
FanMap read_map(const std::filesystem::path& p);

/// A file holding {"exponents": [[...], ...]} or a bare list, or inline text
/// "2,0,0;0,2,0;0,0,2".
std::vector<IntVector> read_exponents(const std::string& file_or_inline);

std::string dump(const Json& j);

// reports
Json ne_to_json(const NECone& ne);
Json nef_to_json(const NefVerdict& v);
Json contraction_to_json(const ContractionResult& c);
Json step_to_json(const MMPStep& s);
Json trace_to_json(const MMPTrace& t);
Json face_to_json(const FaceContraction& f);
Json zariski_to_json(const ZariskiResult& r);
Json ckm_to_json(const CkmVerdict& v);
Json classification_to_json(const PairClassification& c);
Json model_to_json(const ModelReport& r);

}  // namespace toricmori::io
