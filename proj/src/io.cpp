#include "toricmori/io.hpp"

#include <fstream>
#include <sstream>

#include "toricmori/errors.hpp"

namespace toricmori::io {

Json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        if (q.get_den() != 1) throw InputError("expected an integer, got " + j.get<std::string>());
        return q.get_num();
    }
    throw InputError("expected an integer");
}

Json rational_to_json(const Rational& q) { return Json(format_rational(q)); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
    throw InputError("expected a rational as a \"p/q\" string or an integer");
}

Json vector_to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(integer_to_json(x));
    return a;
}

IntVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected a list of integers");
    IntVector v;
    for (const auto& x : j) v.push_back(integer_from_json(x));
    return v;
}

Json vector_to_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_to_json(x));
    return a;
}

Json fan_to_json(const Fan& f) {
    Json j;
    j["rank"] = f.rank;
    j["rays"] = Json::array();
    for (const auto& r : f.rays) j["rays"].push_back(vector_to_json(r));
    j["cones"] = Json::array();
    for (const auto& c : f.cones) j["cones"].push_back(c);
    return j;
}

Fan fan_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("rays") || !j.contains("cones"))
        throw InputError("a fan needs rank, rays and cones");
    if (!j["rank"].is_number_unsigned() && !j["rank"].is_number_integer()) throw InputError("rank must be an integer");
    long rank = j["rank"].get<long>();
    if (rank < 0) throw InputError("rank must be nonnegative");
    Fan f;
    f.rank = static_cast<std::size_t>(rank);
    if (!j["rays"].is_array() || !j["cones"].is_array()) throw InputError("rays and cones must be lists");
    for (const auto& r : j["rays"]) {
        auto v = vector_from_json(r);
        if (v.size() != f.rank) throw InputError("ray length differs from the rank");
        f.rays.push_back(std::move(v));
    }
    for (const auto& c : j["cones"]) {
        if (!c.is_array()) throw InputError("a cone must be a list of ray indices");
        Cone cone;
        for (const auto& i : c) {
            if (!i.is_number_unsigned()) throw InputError("ray indices must be nonnegative integers");
            auto k = i.get<std::size_t>();
            if (k >= f.rays.size()) throw InputError("ray index out of range");
            cone.push_back(k);
        }
        f.cones.push_back(std::move(cone));
    }
    if (f.cones.empty()) throw InputError("a fan needs at least one cone");
    return f;
}

Json divisor_to_json(const Divisor& d) {
    Json j;
    j["coeffs"] = vector_to_json(d);
    return j;
}

Divisor divisor_from_json(const Json& j) {
    const Json& list = j.is_object() ? j.at("coeffs") : j;
    if (!list.is_array()) throw InputError("divisor coefficients must be a list");
    Divisor d;
    for (const auto& x : list) d.push_back(rational_from_json(x));
    return d;
}

Json matrix_to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_to_json(m.row_vector(r)));
    return a;
}

IntMatrix matrix_from_json(const Json& j, std::size_t cols) {
    if (!j.is_array()) throw InputError("matrix must be a list of rows");
    std::vector<IntVector> rows;
    for (const auto& r : j) {
        auto v = vector_from_json(r);
        if (v.size() != cols) throw InputError("matrix row has the wrong length");
        rows.push_back(std::move(v));
    }
    return IntMatrix::from_rows(rows, cols);
}

Json map_to_json(const FanMap& m) {
    Json j;
    j["matrix"] = matrix_to_json(m.matrix);
    j["source"] = fan_to_json(m.source);
    j["target"] = fan_to_json(m.target);
    return j;
}

FanMap map_from_json(const Json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target"))
        throw InputError("a map needs source and target");
    auto load = [&](const Json& x) {
        if (x.is_string()) return read_fan(base_dir / x.get<std::string>());
        return fan_from_json(x);
    };
    FanMap m;
    m.source = load(j["source"]);
    m.target = load(j["target"]);
    if (j.contains("matrix")) {
        m.matrix = matrix_from_json(j["matrix"], m.source.rank);
        if (m.matrix.rows() != m.target.rank) throw InputError("matrix row count differs from the target rank");
    } else {
        if (m.source.rank != m.target.rank) throw InputError("a map without matrix needs equal ranks");
        m.matrix = IntMatrix::identity(m.source.rank);
    }
    return m;
}

Json read_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw InputError("cannot read " + p.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(p.string() + ": " + e.what());
    }
}

Fan read_fan(const std::filesystem::path& p) {
    try {
        return fan_from_json(read_json(p));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(p.string() + ": " + e.what());
    }
}

Divisor read_divisor(const std::filesystem::path& p) {
    try {
        return divisor_from_json(read_json(p));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(p.string() + ": " + e.what());
    }
}

FanMap read_map(const std::filesystem::path& p) {
    try {
        return map_from_json(read_json(p), p.parent_path());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(p.string() + ": " + e.what());
    }
}

std::vector<IntVector> read_exponents(const std::string& text) {
    std::vector<IntVector> out;
    if (std::filesystem::exists(text)) {
        Json j = read_json(text);
        const Json& list = j.is_object() ? j.at("exponents") : j;
        if (!list.is_array()) throw InputError("exponents must be a list");
        for (const auto& e : list) out.push_back(vector_from_json(e));
        return out;
    }
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::stringstream cells(row);
        std::string cell;
        IntVector v;
        while (std::getline(cells, cell, ',')) {
            Rational q = parse_rational(cell);
            if (q.get_den() != 1) throw InputError("exponent entries must be integers");
            v.push_back(q.get_num());
        }
        if (v.empty()) throw InputError("empty exponent vector in '" + text + "'");
        out.push_back(std::move(v));
    }
    if (out.empty()) throw InputError("no exponents in '" + text + "'");
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json ne_to_json(const NECone& ne) {
    Json j;
    j["generators"] = Json::array();
    for (const auto& g : ne.generators) j["generators"].push_back(vector_to_json(g));
    j["extremal"] = Json::array();
    for (auto k : ne.extremal) j["extremal"].push_back(vector_to_json(ne.generators[k]));
    j["rho"] = ne.rho;
    j["walls"] = Json::array();
    for (const auto& w : ne.walls) j["walls"].push_back({{"rays", w.wall.rays}, {"class", vector_to_json(w.cls)}});
    return j;
}

Json nef_to_json(const NefVerdict& v) {
    Json j;
    j["nef"] = v.nef;
    j["values"] = vector_to_json(RatVector(v.values));
    if (v.violating) {
        const auto& w = v.walls[*v.violating];
        j["violating_wall"] = {{"rays", w.wall.rays}, {"class", vector_to_json(w.cls)}};
    }
    return j;
}

Json contraction_to_json(const ContractionResult& c) {
    Json j;
    j["kind"] = kind_name(c.kind);
    j["target"] = fan_to_json(c.target_to_base.source);
    if (c.removed_ray) j["removed_ray"] = vector_to_json(c.source_to_target.source.rays[*c.removed_ray]);
    j["merged_cones"] = c.merged_cones;
    if (c.kind == ContractionKind::fano) j["quotient"] = matrix_to_json(c.quotient);
    return j;
}

Json step_to_json(const MMPStep& s) {
    Json j;
    j["kind"] = kind_name(s.kind);
    j["ray"] = vector_to_json(s.ray);
    j["value"] = rational_to_json(s.value);
    j["rho_before"] = s.rho_before;
    j["rho_after"] = s.rho_after;
    if (s.removed_ray) j["removed_ray"] = vector_to_json(*s.removed_ray);
    if (s.kind == ContractionKind::flipping) {
        j["old_values"] = vector_to_json(RatVector(s.flip_old_values));
        j["new_values"] = vector_to_json(RatVector(s.flip_new_values));
        j["negativity"] = {{"fan", fan_to_json(s.negativity_fan)}, {"E", vector_to_json(s.negativity)}};
    }
    j["fan"] = fan_to_json(s.fan);
    if (!s.divisor.empty()) j["divisor"] = vector_to_json(s.divisor);
    return j;
}

Json trace_to_json(const MMPTrace& t) {
    Json j;
    j["initial_rho"] = t.initial_rho;
    j["steps"] = Json::array();
    for (const auto& s : t.steps) j["steps"].push_back(step_to_json(s));
    j["outcome"] = t.outcome == MMPOutcome::nef ? "nef" : "fano";
    j["final_fan"] = fan_to_json(t.final_map.source);
    j["final_divisor"] = vector_to_json(t.final_divisor);
    return j;
}

Json face_to_json(const FaceContraction& f) {
    Json j;
    j["fan"] = fan_to_json(f.z_to_base.source);
    j["merged_cones"] = f.merged;
    if (f.descended) j["divisor"] = vector_to_json(*f.descended);
    j["quotient"] = matrix_to_json(f.quotient);
    return j;
}

Json zariski_to_json(const ZariskiResult& r) {
    Json j;
    j["model"] = fan_to_json(r.to_base.source);
    j["pullback"] = vector_to_json(r.pulled);
    j["P"] = vector_to_json(r.p);
    j["N"] = vector_to_json(r.n);
    j["cartier_index_P"] = integer_to_json(r.cartier_index);
    j["semiample"] = face_to_json(r.semiample);
    j["mmp"] = trace_to_json(r.trace);
    return j;
}

Json ckm_to_json(const CkmVerdict& v) {
    Json j;
    j["ok"] = v.ok();
    j["nef"] = v.nef;
    j["effective"] = v.effective;
    j["sections"] = v.sections;
    if (v.violating_wall) j["violating_wall"] = *v.violating_wall;
    if (v.failing_m) j["failing_m"] = *v.failing_m;
    if (v.witness) j["witness"] = vector_to_json(*v.witness);
    return j;
}

Json classification_to_json(const PairClassification& c) {
    Json j;
    j["verdict"] = verdict_name(c.verdict);
    if (c.witness) j["witness"] = vector_to_json(*c.witness);
    if (c.min_discrepancy) j["min_discrepancy"] = rational_to_json(*c.min_discrepancy);
    j["crepant"] = Json::array();
    for (const auto& x : c.crepant) j["crepant"].push_back(vector_to_json(x));
    j["certificate"] = c.certificate;
    return j;
}

Json model_to_json(const ModelReport& r) {
    Json j;
    j["model"] = model_name(r.type);
    j["ambient"] = fan_to_json(r.ambient.source);
    j["divisor"] = vector_to_json(r.divisor);
    j["ambient_walls"] = nef_to_json(r.ambient_walls);
    j["mmp"] = trace_to_json(r.trace);
    j["nef"] = nef_to_json(r.nef);
    if (r.face) j["face_contraction"] = face_to_json(*r.face);
    j["discrepancies"] = Json::array();
    for (const auto& [v, a] : r.discrepancies)
        j["discrepancies"].push_back({{"ray", vector_to_json(v)}, {"a", rational_to_json(a)}});
    j["notes"] = r.notes;
    return j;
}

}  // namespace toricmori::io
