// Python module toricmori._core. Fans, maps and reports cross the boundary
// as plain dicts in the same layout as the JSON files; rationals are "p/q"
// strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricmori/corpus.hpp"
#include "toricmori/errors.hpp"
#include "toricmori/io.hpp"

namespace py = pybind11;
using namespace toricmori;
using io::Json;

namespace {

Json to_json(const py::object& o) {
    auto dumps = py::module_::import("json").attr("dumps");
    return Json::parse(py::cast<std::string>(dumps(o)));
}

py::object from_json(const Json& j) {
    auto loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

Fan fan_arg(const py::object& o) {
    Fan f = io::fan_from_json(to_json(o));
    if (auto v = validate_fan(f); !v.empty()) throw InputError("not a fan: " + v.front());
    return f;
}

// A map dict, or a fan dict meaning the map to a point.
FanMap map_arg(const py::object& o) {
    Json j = to_json(o);
    if (j.contains("rays")) {
        Fan f = fan_arg(o);
        return FanMap{IntMatrix(0, f.rank), f, point_fan()};
    }
    FanMap m = io::map_from_json(j, ".");
    for (const Fan* f : {&m.source, &m.target})
        if (auto v = validate_fan(*f); !v.empty()) throw InputError("not a fan: " + v.front());
    return m;
}

Divisor divisor_arg(const py::iterable& xs, std::size_t n) {
    Divisor d;
    for (auto x : xs) d.push_back(parse_rational(py::cast<std::string>(py::str(x))));
    if (d.size() != n) throw InputError("divisor length does not match the ray count");
    return d;
}

IntVector vector_arg(const py::iterable& xs) {
    IntVector v;
    for (auto x : xs) v.emplace_back(py::cast<std::string>(py::str(x)));
    return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact toric Mori theory";

    static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
    static py::exception<PreconditionError> precondition_error(m, "PreconditionError", PyExc_RuntimeError);
    static py::exception<InvariantBreach> invariant_breach(m, "InvariantBreach", PyExc_AssertionError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const PreconditionError& e) {
            // args = (reason, message)
            PyErr_SetObject(precondition_error.ptr(), py::make_tuple(e.reason(), e.what()).ptr());
        } catch (const InputError& e) {
            py::set_error(input_error, e.what());
        } catch (const InvariantBreach& e) {
            py::set_error(invariant_breach, e.what());
        }
    });

    m.def("validate_fan", [](const py::object& f) { return validate_fan(io::fan_from_json(to_json(f))); });
    m.def("resolve", [](const py::object& f) { return from_json(io::fan_to_json(resolve(fan_arg(f)).source)); });
    m.def("qfactorialize", [](const py::object& f) { return from_json(io::fan_to_json(qfactorialize(fan_arg(f)).source)); });

    m.def("ne_cone", [](const py::object& map) { return from_json(io::ne_to_json(ne_cone(map_arg(map)))); });

    m.def("canonical_divisor", [](const py::object& f) {
        return from_json(io::vector_to_json(canonical_divisor(fan_arg(f))));
    });

    m.def("run_mmp", [](const py::object& map, const py::iterable& d) {
        FanMap fm = map_arg(map);
        return from_json(io::trace_to_json(run_mmp(fm, divisor_arg(d, fm.source.rays.size()))));
    }, py::arg("map"), py::arg("divisor"));

    m.def("is_pseudo_effective", [](const py::object& map, const py::iterable& d) {
        FanMap fm = map_arg(map);
        auto v = is_pseudo_effective(fm, divisor_arg(d, fm.source.rays.size()));
        py::dict out;
        out["pseudo_effective"] = v.pseudo_effective;
        out["route"] = v.route;
        return out;
    });

    m.def("zariski", [](const py::object& map, const py::iterable& d, long m_max) {
        FanMap fm = map_arg(map);
        auto r = zariski_decompose(fm, divisor_arg(d, fm.source.rays.size()));
        Json j = io::zariski_to_json(r);
        if (is_affine_base(r.to_base)) j["ckm"] = io::ckm_to_json(verify_ckm(r, m_max));
        return from_json(j);
    }, py::arg("map"), py::arg("divisor"), py::arg("m_max") = 0);

    m.def("sections", [](const py::object& f, const py::iterable& d, std::optional<long> box) {
        Fan fan = fan_arg(f);
        std::optional<Integer> b;
        if (box) b = Integer(*box);
        Json j = Json::array();
        for (const auto& p : sections_basis(fan, divisor_arg(d, fan.rays.size()), b)) j.push_back(io::vector_to_json(p));
        return from_json(j);
    }, py::arg("fan"), py::arg("divisor"), py::arg("box") = py::none());

    m.def("hilbert", [](const py::object& map, const py::iterable& d) {
        FanMap fm = map_arg(map);
        Json j = Json::array();
        for (const auto& g : algebra_generators(fm, divisor_arg(d, fm.source.rays.size()))) j.push_back(io::vector_to_json(g));
        return from_json(j);
    });

    m.def("classify", [](const py::object& f, const std::optional<py::iterable>& d) {
        Fan fan = fan_arg(f);
        Divisor div = d ? divisor_arg(*d, fan.rays.size()) : Divisor(fan.rays.size(), Rational(0));
        return from_json(io::classification_to_json(classify_pair(fan, div)));
    }, py::arg("fan"), py::arg("divisor") = py::none());

    m.def("discrepancy", [](const py::object& f, const py::iterable& d, const py::iterable& v) {
        Fan fan = fan_arg(f);
        return format_rational(discrepancy(fan, divisor_arg(d, fan.rays.size()), vector_arg(v)));
    });

    m.def("newton_model", [](const std::vector<py::iterable>& exps, const std::string& type) {
        std::vector<IntVector> e;
        for (const auto& x : exps) e.push_back(vector_arg(x));
        ModelType t;
        if (type == "minimal") t = ModelType::minimal;
        else if (type == "canonical") t = ModelType::canonical;
        else if (type == "dlt") t = ModelType::dlt;
        else if (type == "lc") t = ModelType::lc;
        else throw InputError("unknown model type " + type);
        return from_json(io::model_to_json(model(newton_polytope(e), t)));
    }, py::arg("exponents"), py::arg("model") = "minimal");

    m.def("corpus", [](std::uint64_t seed, std::size_t count, bool affine_only) {
        CorpusOptions opt;
        opt.affine_only = affine_only;
        Json j = Json::array();
        for (const auto& e : generate_corpus(seed, count, opt)) {
            Json x;
            x["name"] = e.name;
            x["kind"] = corpus_kind_name(e.kind);
            x["map"] = io::map_to_json(e.map);
            x["divisor"] = io::vector_to_json(e.divisor);
            j.push_back(x);
        }
        return from_json(j);
    }, py::arg("seed"), py::arg("count"), py::arg("affine_only") = false);
}
