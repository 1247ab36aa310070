// Command-line entry point: reads one problem document (JSON, from a file
// or standard input), runs the requested computation, and prints a
// structured report. Exact values are rendered as decimal-free strings.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "torcur/builtins.hpp"
#include "torcur/integrate.hpp"
#include "torcur/problem.hpp"
#include "torcur/selftest.hpp"

namespace {

using nlohmann::ordered_json;
using namespace torcur;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cli", "cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<long long> parse_direction_flag(const std::string& flag) {
    std::vector<long long> v;
    std::stringstream ss(flag);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw Error("cli", "--direction expects a comma-separated integer vector");
        }
    }
    if (v.empty()) throw Error("cli", "--direction expects a comma-separated integer vector");
    return v;
}

ordered_json fan_report(const Fan& fan) {
    ordered_json j;
    j["n"] = fan.n;
    j["r"] = fan.r;
    j["l"] = fan.l;
    ordered_json perm = ordered_json::array();
    for (int i = 0; i < fan.r; ++i) perm.push_back(fan.old_to_new[i] + 1);
    j["reindexing_old_to_new"] = perm;
    j["rays"] = fan.rays;
    ordered_json cones = ordered_json::array();
    for (const auto& cone : fan.max_cones) {
        ordered_json c = ordered_json::array();
        for (int id : cone) c.push_back(id + 1);
        cones.push_back(c);
    }
    j["max_cones"] = cones;
    j["distinguished"] = fan.distinguished + 1;
    return j;
}

LocalizationEngine make_engine(const ProblemDocument& p, const std::string& direction_flag) {
    DegreeData dd = p.derive();
    if (direction_flag.empty()) return LocalizationEngine(p.fan, dd);
    return LocalizationEngine(p.fan, dd, direction_from_vector(p.fan, parse_direction_flag(direction_flag)));
}

ordered_json laurent_report(const ThetaLaurent& series) {
    ordered_json arr = ordered_json::array();
    for (const auto& [t_exp, poly] : series) {
        ordered_json rec;
        rec["t"] = t_exp;
        rec["value"] = poly.to_json();
        arr.push_back(rec);
    }
    return arr;
}

int run_verb(const std::string& verb, const std::string& input_path, const std::string& direction_flag,
             bool verbose) {
    if (verb == "selftest") {
        const auto results = run_selftest();
        int failures = 0;
        for (const auto& res : results) {
            if (res.ok) {
                std::cout << "ok   " << res.name << "\n";
            } else {
                ++failures;
                std::cout << "FAIL " << res.name << ": " << res.detail << "\n";
            }
        }
        std::cout << (failures ? "selftest: FAILED, " : "selftest: passed, ") << results.size() - failures
                  << "/" << results.size() << " checks\n";
        return failures ? 1 : 0;
    }

    ProblemDocument p = parse_problem_text(read_input(input_path));
    ordered_json report;
    report["command"] = verb;

    if (verb == "validate") {
        report["ok"] = true;
        report["fan"] = fan_report(p.fan);
    } else if (verb == "primitive-collections") {
        ordered_json arr = ordered_json::array();
        for (const auto& pc : primitive_collections(p.fan)) {
            ordered_json c = ordered_json::array();
            for (int id : pc) c.push_back(id + 1);
            arr.push_back(c);
        }
        report["primitive_collections"] = arr;
    } else if (verb == "degree-data") {
        DegreeData dd = p.derive();
        report["genus"] = dd.g;
        report["degrees"] = dd.d;
        report["ranks"] = dd.N;
        report["dim_morphisms"] = dd.dim_mor;
        report["dim_family"] = dd.dim_W;
        report["dim_compactification"] = dd.dim_V;
        report["dim_fibre"] = dd.dim_Y;
    } else if (verb == "chi-y") {
        DegreeData dd = p.derive();
        report["euler_characteristic"] = euler_char_fibre(p.fan, dd).str();
    } else if (verb == "pushforward") {
        LocalizationEngine engine = make_engine(p, direction_flag);
        const auto& m = p.require_exponents();
        report["exponents"] = m;
        report["direction"] = engine.direction().v;
        if (verbose) {
            ordered_json comps = ordered_json::array();
            for (int c = 0; c < p.fan.cone_count(); ++c) {
                ordered_json rec;
                ordered_json cone = ordered_json::array();
                for (int id : p.fan.max_cones[c]) cone.push_back(id + 1);
                rec["cone"] = cone;
                rec["series"] = laurent_report(engine.fixed_component_term(c, m));
                comps.push_back(rec);
            }
            report["components"] = comps;
        }
        report["class"] = engine.pushforward_class(m).to_json();
    } else if (verb == "integrate") {
        LocalizationEngine engine = make_engine(p, direction_flag);
        const auto& m = p.require_exponents();
        report["exponents"] = m;
        report["direction"] = engine.direction().v;
        IntegrationResult res = integrate_morphism_space(engine, m);
        if (verbose) report["pushforward_class"] = res.pushforward.to_json();
        report["value"] = res.value.str();
    } else if (verb == "check-vanishing") {
        LocalizationEngine engine = make_engine(p, direction_flag);
        const auto& m = p.require_exponents();
        const auto& subset = p.require_ray_subset();
        ordered_json jsub = ordered_json::array();
        for (int id : subset) jsub.push_back(id + 1);
        report["J"] = jsub;
        report["exponents"] = m;
        auto cert = engine.vanishing_predicate(subset, m);
        report["predicate"] = cert.holds;
        report["spans_no_cone"] = cert.spans_no_cone;
        report["exponents_reach_bound"] = cert.exponents_large;
        report["detail"] = cert.detail;
        ThetaPoly pushed = engine.pushforward_class(m);
        report["pushforward_zero"] = pushed.is_zero();
        if (verbose) report["pushforward_class"] = pushed.to_json();
        long long total = 0;
        for (long long e : m) total += e;
        if (total == engine.degree_data().dim_V) {
            report["integral"] = integrate_morphism_space(engine, m).value.str();
        } else if (pushed.is_zero()) {
            report["integral"] = "0";
        } else {
            report["integral"] = nullptr;  // not top degree and not identically zero
        }
    } else {
        throw Error("cli", "unknown command " + verb);
    }

    std::cout << report.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection numbers on compactified spaces of curves in smooth projective toric varieties"};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string direction_flag;
    bool verbose = false;

    const std::vector<std::string> verbs = {"validate",  "primitive-collections",
                                            "degree-data", "chi-y",
                                            "pushforward", "integrate",
                                            "check-vanishing", "selftest"};
    const std::map<std::string, std::string> descriptions = {
        {"validate", "validate the fan and report the canonical reindexing"},
        {"primitive-collections", "list the minimal ray subsets spanning no cone"},
        {"degree-data", "complete the degrees and derive ranks and dimensions"},
        {"chi-y", "Euler characteristic of the toric fibre"},
        {"pushforward", "push the ray-class product forward to the Jacobian power"},
        {"integrate", "integrate the ray-class product over the compactified space"},
        {"check-vanishing", "test the saturated non-face vanishing criterion"},
        {"selftest", "run the full invariant suite on built-in fans"},
    };
    for (const auto& verb : verbs) {
        auto* sub = app.add_subcommand(verb, descriptions.at(verb));
        if (verb != "selftest") {
            sub->add_option("input", input_path, "problem document path, or - for stdin");
            sub->add_option("--direction", direction_flag, "override the localization direction (v1,...,vn)");
            sub->add_flag("--verbose", verbose, "include intermediate classes in the report");
        }
    }

    CLI11_PARSE(app, argc, argv);

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        return run_verb(verb, input_path, direction_flag, verbose);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
