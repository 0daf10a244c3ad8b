// Command-line front end. Every command prints one JSON report on stdout.
// Exit codes: 0 ok, 1 malformed input, 2 precondition, 3 invariant breach.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "toricmori/corpus.hpp"
#include "toricmori/errors.hpp"
#include "toricmori/io.hpp"

using namespace toricmori;
using io::Json;

namespace {

struct Inputs {
    std::string fan;
    std::string map;
    std::string divisor;
    bool canonical = false;
    std::string trace;
    long m_max = 0;
    long box = -1;
    std::string exponents;
    std::string model = "minimal";
    std::uint64_t seed = 1;
    std::size_t count = 100;
    bool affine = false;
};

// The failure report carries extra data for some preconditions.
struct ReportedPrecondition : PreconditionError {
    Json extra;
    ReportedPrecondition(const PreconditionError& e, Json x) : PreconditionError(e), extra(std::move(x)) {}
};

const Fan& checked(const Fan& f) {
    if (auto v = validate_fan(f); !v.empty()) throw InputError("not a fan: " + v.front());
    return f;
}

FanMap load_map(const Inputs& in) {
    if (!in.map.empty()) {
        FanMap m = io::read_map(in.map);
        checked(m.source);
        checked(m.target);
        return m;
    }
    if (in.fan.empty()) throw InputError("one of --map or --fan is required");
    Fan f = io::read_fan(in.fan);
    return FanMap{IntMatrix(0, f.rank), checked(f), point_fan()};
}

Divisor load_divisor(const std::string& text, std::size_t n) {
    Divisor d;
    if (std::filesystem::exists(text)) {
        d = io::read_divisor(text);
    } else {
        std::stringstream s(text);
        std::string cell;
        while (std::getline(s, cell, ',')) d.push_back(parse_rational(cell));
    }
    if (d.size() != n) throw InputError("divisor has " + std::to_string(d.size()) + " coefficients, expected " + std::to_string(n));
    return d;
}

Divisor divisor_for(const Inputs& in, const Fan& f) {
    if (in.canonical) return canonical_divisor(f);
    if (in.divisor.empty()) throw InputError("--divisor is required");
    return load_divisor(in.divisor, f.rays.size());
}

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << io::dump(j);
}

Json ok(const std::string& command) {
    Json j;
    j["command"] = command;
    j["status"] = "ok";
    return j;
}

Json cmd_fan(const std::string& action, const Inputs& in) {
    Fan f = io::read_fan(in.fan);
    Json j = ok("fan " + action);
    if (action == "validate") {
        auto v = validate_fan(f);
        j["valid"] = v.empty();
        j["violations"] = v;
        if (!v.empty()) {
            j["status"] = "error";
            j["error"] = "input";
            j["reason"] = "not-a-fan";
        }
        return j;
    }
    checked(f);
    if (action == "resolve") {
        auto r = resolve(f);
        j["fan"] = io::fan_to_json(r.source);
        j["added_rays"] = r.source.rays.size() - f.rays.size();
    } else {
        Integer base;
        auto r = qfactorialize(f, &base);
        j["fan"] = io::fan_to_json(r.source);
        j["lifting_base"] = io::integer_to_json(base);
        j["certificate"] = lifting_certificate(r.source, f, base);
    }
    return j;
}

Json cmd_ne(const Inputs& in) {
    FanMap m = load_map(in);
    Json j = ok("ne-cone");
    j["ne"] = io::ne_to_json(ne_cone(m));
    return j;
}

Json cmd_mmp(const Inputs& in) {
    FanMap m = load_map(in);
    Divisor d = divisor_for(in, m.source);
    auto t = run_mmp(m, d);
    Json trace = io::trace_to_json(t);
    if (!in.trace.empty()) write_file(in.trace, trace);
    Json j = ok("mmp");
    j["kinds"] = Json::array();
    for (const auto& s : t.steps) j["kinds"].push_back(kind_name(s.kind));
    j["outcome"] = trace["outcome"];
    j["final_fan"] = trace["final_fan"];
    j["final_divisor"] = trace["final_divisor"];
    if (in.trace.empty()) j["trace"] = trace;
    return j;
}

Json cmd_zariski(const Inputs& in) {
    FanMap m = load_map(in);
    Divisor d = divisor_for(in, m.source);
    if (!is_q_cartier(m.source, d)) throw PreconditionError("not-q-cartier", "divisor is not Q-Cartier");
    auto pv = is_pseudo_effective(m, d);
    if (!pv.pseudo_effective) {
        Json w;
        w["route"] = pv.route;
        if (pv.route == "mmp") {
            FanMap q = m;
            if (!is_simplicial(q.source)) q.source = qfactorialize(q.source).source;
            w["trace"] = io::trace_to_json(run_mmp(q, d));
        } else {
            w["sections_polytope"] = "empty";
        }
        throw ReportedPrecondition(
            PreconditionError("pseudo-effectivity failed", "divisor is not pseudo-effective over the base"), w);
    }
    auto r = zariski_decompose(m, d);
    Json j = ok("zariski");
    j["pseudo_effective_route"] = pv.route;
    j["decomposition"] = io::zariski_to_json(r);
    if (is_affine_base(r.to_base)) j["ckm"] = io::ckm_to_json(verify_ckm(r, in.m_max));
    if (!in.trace.empty()) write_file(in.trace, io::trace_to_json(r.trace));
    return j;
}

Json cmd_sections(const Inputs& in) {
    FanMap m = load_map(in);
    Divisor d = divisor_for(in, m.source);
    std::optional<Integer> box;
    if (in.box >= 0) box = Integer(in.box);
    auto pts = sections_basis(m.source, d, box);
    Json j = ok("sections");
    j["count"] = pts.size();
    j["points"] = Json::array();
    for (const auto& p : pts) j["points"].push_back(io::vector_to_json(p));
    return j;
}

Json cmd_hilbert(const Inputs& in) {
    FanMap m = load_map(in);
    Divisor d = divisor_for(in, m.source);
    auto g = in.map.empty() ? hilbert_basis(section_cone(m.source, d)) : algebra_generators(m, d);
    Json j = ok("hilbert");
    j["grading"] = "last coordinate";
    j["generators"] = Json::array();
    for (const auto& x : g) j["generators"].push_back(io::vector_to_json(x));
    return j;
}

Json cmd_sing(const Inputs& in) {
    Fan f = io::read_fan(in.fan);
    checked(f);
    Divisor d = in.divisor.empty() ? Divisor(f.rays.size(), Rational(0)) : load_divisor(in.divisor, f.rays.size());
    Json j = ok("sing classify");
    j["classification"] = io::classification_to_json(classify_pair(f, d));
    return j;
}

Json cmd_newton(const Inputs& in) {
    ModelType t;
    if (in.model == "minimal") t = ModelType::minimal;
    else if (in.model == "canonical") t = ModelType::canonical;
    else if (in.model == "dlt") t = ModelType::dlt;
    else if (in.model == "lc" || in.model == "log-canonical") t = ModelType::lc;
    else throw InputError("unknown model type " + in.model);
    auto p = newton_polytope(io::read_exponents(in.exponents));
    Json j = ok("newton");
    j["report"] = io::model_to_json(model(p, t));
    return j;
}

// Runs the MMP on every instance and checks the trace invariants.
Json cmd_corpus(const Inputs& in) {
    CorpusOptions opt;
    opt.affine_only = in.affine;
    auto entries = generate_corpus(in.seed, in.count, opt);
    Json j = ok("corpus");
    j["seed"] = in.seed;
    j["count"] = entries.size();
    std::size_t nef = 0, fano = 0, flips = 0, divisorial = 0, failures = 0;
    j["instances"] = Json::array();
    for (const auto& e : entries) {
        Json x;
        x["name"] = e.name;
        x["map"] = io::map_to_json(e.map);
        x["divisor"] = io::vector_to_json(e.divisor);
        std::vector<std::string> problems;
        try {
            auto t = run_mmp(e.map, e.divisor);
            std::set<std::vector<std::vector<IntVector>>> seen{fan_key(e.map.source)};
            Json kinds = Json::array();
            for (const auto& s : t.steps) {
                kinds.push_back(kind_name(s.kind));
                if (s.kind == ContractionKind::fano) continue;
                if (!seen.insert(fan_key(s.fan)).second) problems.push_back("repeated fan");
                if (s.kind == ContractionKind::flipping) {
                    ++flips;
                    bool nonneg = std::all_of(s.negativity.begin(), s.negativity.end(), [](const Rational& v) { return v >= 0; });
                    bool nonzero = std::any_of(s.negativity.begin(), s.negativity.end(), [](const Rational& v) { return v != 0; });
                    if (!nonneg || !nonzero) problems.push_back("negativity oracle");
                } else {
                    ++divisorial;
                    if (s.rho_after + 1 != s.rho_before) problems.push_back("picard drop");
                }
            }
            (t.outcome == MMPOutcome::nef ? nef : fano)++;
            x["kinds"] = kinds;
            x["outcome"] = t.outcome == MMPOutcome::nef ? "nef" : "fano";
        } catch (const Error& err) {
            problems.push_back(err.what());
        }
        if (!problems.empty()) ++failures;
        x["problems"] = problems;
        j["instances"].push_back(x);
    }
    j["summary"] = {{"nef", nef}, {"fano", fano}, {"divisorial_steps", divisorial}, {"flips", flips}, {"failures", failures}};
    if (failures) throw InvariantBreach("corpus harness found " + std::to_string(failures) + " failing instances");
    return j;
}

Json failure(const std::string& kind, const std::string& reason, const std::string& message) {
    Json j;
    j["status"] = "error";
    j["error"] = kind;
    j["reason"] = reason;
    j["message"] = message;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toric Mori theory"};
    app.require_subcommand(1);
    Inputs in;
    std::string fan_action;

    auto add_map = [&](CLI::App* c) {
        auto* m = c->add_option("--map", in.map, "map file: {matrix, source, target}");
        auto* f = c->add_option("--fan", in.fan, "fan file; the map goes to a point");
        m->excludes(f);
    };
    auto add_divisor = [&](CLI::App* c, bool canonical) {
        auto* d = c->add_option("--divisor", in.divisor, "divisor file or inline \"a,b/c,...\"");
        if (canonical) d->excludes(c->add_flag("--canonical", in.canonical, "use K_X"));
    };

    auto* fan = app.add_subcommand("fan", "fan operations");
    fan->require_subcommand(1);
    for (const char* a : {"validate", "resolve", "qfactorialize"}) {
        auto* s = fan->add_subcommand(a, std::string(a) + " a fan");
        s->add_option("fan", in.fan, "fan file")->required();
        s->callback([&fan_action, a] { fan_action = a; });
    }

    auto* ne = app.add_subcommand("ne-cone", "relative cone of curves");
    add_map(ne);

    auto* mmp = app.add_subcommand("mmp", "run the D-MMP");
    add_map(mmp);
    add_divisor(mmp, true);
    mmp->add_option("--trace", in.trace, "write the trace to this file");

    auto* zar = app.add_subcommand("zariski", "Zariski decomposition");
    add_map(zar);
    add_divisor(zar, true);
    zar->add_option("--m-max", in.m_max, "check sections for m = 1..m-max (default 4 x Cartier index)");
    zar->add_option("--trace", in.trace, "write the MMP trace to this file");

    auto* sec = app.add_subcommand("sections", "lattice points of the section polytope");
    add_map(sec);
    add_divisor(sec, true);
    sec->add_option("--box", in.box, "restrict to |u_i| <= box");

    auto* hil = app.add_subcommand("hilbert", "generators of the section algebra");
    add_map(hil);
    add_divisor(hil, true);

    auto* sing = app.add_subcommand("sing", "singularities of pairs");
    sing->require_subcommand(1);
    auto* cls = sing->add_subcommand("classify", "classify (X, D)");
    cls->add_option("--fan", in.fan, "fan file")->required();
    cls->add_option("--divisor", in.divisor, "boundary divisor (default 0)");

    auto* newton = app.add_subcommand("newton", "models of a Newton non-degenerate hypersurface");
    newton->add_option("--exponents", in.exponents, "exponents file or inline \"2,0,0;0,2,0;0,0,2\"")->required();
    newton->add_option("--model", in.model, "minimal, canonical, dlt or lc");

    auto* corpus = app.add_subcommand("corpus", "random-instance property harness");
    corpus->add_option("--seed", in.seed, "generator seed");
    corpus->add_option("--count", in.count, "number of instances");
    corpus->add_flag("--affine", in.affine, "only instances over an affine base");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cout << io::dump(failure("input", "bad-arguments", e.what()));
        return 1;
    }

    try {
        Json out;
        if (fan->parsed()) out = cmd_fan(fan_action, in);
        else if (ne->parsed()) out = cmd_ne(in);
        else if (mmp->parsed()) out = cmd_mmp(in);
        else if (zar->parsed()) out = cmd_zariski(in);
        else if (sec->parsed()) out = cmd_sections(in);
        else if (hil->parsed()) out = cmd_hilbert(in);
        else if (cls->parsed()) out = cmd_sing(in);
        else if (newton->parsed()) out = cmd_newton(in);
        else out = cmd_corpus(in);
        std::cout << io::dump(out);
        return out["status"] == "ok" ? 0 : 1;
    } catch (const ReportedPrecondition& e) {
        Json j = failure("precondition", e.reason(), e.what());
        j["witness"] = e.extra;
        std::cout << io::dump(j);
        return 2;
    } catch (const PreconditionError& e) {
        std::cout << io::dump(failure("precondition", e.reason(), e.what()));
        return 2;
    } catch (const InputError& e) {
        std::cout << io::dump(failure("input", "malformed-input", e.what()));
        return 1;
    } catch (const InvariantBreach& e) {
        std::cout << io::dump(failure("invariant", "invariant-breach", e.what()));
        return 3;
    }
}
