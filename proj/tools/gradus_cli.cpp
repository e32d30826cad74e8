#include "gradus/gradus.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using nlohmann::json;

namespace {

struct UsageFailure {
    std::string message;
};

// "@path" reads the file; anything else is taken literally.
std::string resolve(const std::string& value) {
    if (value.empty() || value.front() != '@') return value;
    std::ifstream in(value.substr(1), std::ios::binary);
    if (!in) throw UsageFailure{"cannot read " + value.substr(1)};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Inputs {
    std::string f, q, g, ell, points, point;
    std::vector<std::string> span;
    std::map<std::string, std::uint64_t> numbers;
    bool general = false;
};

struct Spec {
    const char* name;
    const char* help;
    std::vector<std::string> options;
};

// Options each subcommand accepts; "f" and "q" map to --poly/-f/--f and -q/--q.
const std::vector<Spec>& specs() {
    static const std::vector<Spec> table = {
        {"milnor-dims", "dimensions of the graded pieces of the Milnor algebra", {"f", "max-degree"}},
        {"smooth", "smoothness of the hypersurface F = 0", {"f"}},
        {"ci-smooth", "smoothness of the complete intersection F = Q = 0", {"f", "q", "general"}},
        {"perp", "perp of J_{F,k} or of a span of forms", {"f?", "span", "k"}},
        {"colon", "degree-k piece of the colon ideal (J_F : Q)", {"f", "q", "k"}},
        {"extract-c", "the cubic C of a pair (F, Q)", {"f", "q"}},
        {"socle-pairing", "socle functional and pairing matrix in degree j", {"f", "j"}},
        {"defect", "defect of degree-k forms on a point set", {"points", "k"}},
        {"lemma-defect", "compare dim M(F)_{T-k} with reference dims plus defect", {"f", "points?", "k"}},
        {"special-q", "the special singular form", {"n", "d"}},
        {"singular-search", "singular points over a small prime field", {"f", "prime", "points?"}},
        {"node-check", "node test at points", {"f", "points?", "point", "chart"}},
        {"lefschetz", "strong Lefschetz check or randomized search", {"f", "ell"}},
        {"membership-u", "search for a smooth cubic in (J_{F,3})^perp", {"f"}},
        {"construct-pair", "build Q from a witness G and certify the pair", {"f", "g", "max-perturbations"}},
        {"verify-corollary", "certify a pair (F, Q)", {"f", "q"}},
        {"theorem14", "injectivity witnesses for l^2 and Q on M(F)_1", {"f"}},
        {"deformation", "family Q_special + t R", {"steps"}},
        {"reproduce-example", "golden checks for the special cubic threefold", {}},
    };
    return table;
}

void print_text(const json& value, int indent, std::ostream& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (value.is_object()) {
        for (const auto& [key, v] : value.items()) {
            const bool nested = (v.is_object() && !v.empty()) ||
                                (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& e) {
                                     return e.is_structured();
                                 }));
            if (nested) {
                out << pad << key << ":\n";
                print_text(v, indent + 1, out);
            } else {
                out << pad << key << ": ";
                print_text(v, 0, out);
                out << "\n";
            }
        }
    } else if (value.is_array()) {
        const bool structured = std::any_of(value.begin(), value.end(), [](const json& e) { return e.is_structured(); });
        if (structured) {
            for (const auto& e : value) {
                out << pad << "-\n";
                print_text(e, indent + 1, out);
            }
        } else {
            out << "[";
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i) out << ", ";
                print_text(value[i], 0, out);
            }
            out << "]";
        }
    } else if (value.is_string()) {
        out << value.get<std::string>();
    } else {
        out << value.dump();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jacobian-ring computations for cubic hypersurfaces", "gradus"};
    app.fallthrough();
    app.require_subcommand(1);

    const char* env_field = std::getenv("GRADUS_FIELD");
    std::string field = env_field && *env_field ? env_field : "rational";
    std::uint64_t seed = 0;
    std::int64_t coeff_bound = 10;
    std::int64_t kmax = 12;
    std::int64_t trials = 5;
    std::string output = "text";
    bool timing = false;
    std::uint64_t nvars = 5;

    app.add_option("--field", field, "rational or fp:<p>");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--coeff-bound", coeff_bound, "coefficient bound for random draws");
    app.add_option("--kmax", kmax, "largest degree examined by smoothness sweeps");
    app.add_option("--trials", trials, "random trials per search");
    app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timing", timing, "include wall time in the report");
    auto* nvars_opt = app.add_option("--nvars", nvars, "number of variables (n + 1)");

    Inputs in;
    std::map<std::string, CLI::App*> subs;
    for (const auto& spec : specs()) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        subs[spec.name] = sub;
        for (std::string opt : spec.options) {
            const bool optional = !opt.empty() && opt.back() == '?';
            if (optional) opt.pop_back();
            CLI::Option* o = nullptr;
            if (opt == "f") {
                o = sub->add_option("--poly,-f,--f", in.f, "form F (inline or @file)");
                if (!optional) o->required();
            } else if (opt == "q") {
                o = sub->add_option("-q,--q", in.q, "quadric Q (inline or @file)")->required();
            } else if (opt == "g") {
                sub->add_option("-g,--g", in.g, "dual cubic G (inline or @file)");
            } else if (opt == "ell") {
                sub->add_option("--ell", in.ell, "linear form (inline or @file)");
            } else if (opt == "points") {
                o = sub->add_option("--points", in.points, "point list (inline or @file)");
                if (!optional) o->required();
            } else if (opt == "point") {
                sub->add_option("--point", in.point, "one point, comma separated");
            } else if (opt == "span") {
                sub->add_option("--span", in.span, "forms spanning E (inline or @file)");
            } else if (opt == "general") {
                sub->add_flag("--general", in.general, "accept any degrees and variable counts");
            } else {
                o = sub->add_option("--" + opt, in.numbers[opt]);
                if (opt == "k") o->required();
            }
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return GRADUS_USAGE;
    }

    std::string command;
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) command = name;

    json params = json::object();
    try {
        CLI::App* sub = subs[command];
        auto given = [&](const char* flag) {
            const CLI::Option* o = sub->get_option_no_throw(flag);
            return o != nullptr && o->count() > 0;
        };
        if (given("--poly")) params["f"] = resolve(in.f);
        if (given("-q")) params["q"] = resolve(in.q);
        if (given("-g")) params["g"] = resolve(in.g);
        if (given("--ell")) params["ell"] = resolve(in.ell);
        if (given("--points")) params["points"] = resolve(in.points);
        if (given("--point")) {
            if (params.contains("points")) throw UsageFailure{"--point and --points are exclusive"};
            params["points"] = resolve(in.point);
        }
        if (given("--span")) {
            json list = json::array();
            for (const auto& s : in.span) list.push_back(resolve(s));
            params["span"] = list;
        }
        if (in.general) params["general"] = true;
        for (const auto& [name, value] : in.numbers) {
            std::string flag = "--" + name;
            if (!given(flag.c_str())) continue;
            std::string key = name;
            std::replace(key.begin(), key.end(), '-', '_');
            params[key] = value;
        }
        if (nvars_opt->count() > 0) params["nvars"] = nvars;
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.message << "\n";
        return GRADUS_USAGE;
    }

    gradus_context* ctx = nullptr;
    if (gradus_status s = gradus_context_new(field.c_str(), seed, &ctx); s != GRADUS_OK) {
        std::cerr << "error: " << gradus_last_error(nullptr) << "\n";
        return s;
    }
    const std::pair<const char*, std::int64_t> options[] = {
        {"coeff-bound", coeff_bound}, {"kmax", kmax}, {"trials", trials}, {"timing", timing ? 1 : 0}};
    for (const auto& [name, value] : options) {
        if (gradus_status s = gradus_context_set_option(ctx, name, value); s != GRADUS_OK) {
            std::cerr << "error: " << gradus_last_error(ctx) << "\n";
            gradus_context_free(ctx);
            return s;
        }
    }

    gradus_report* report = nullptr;
    const std::string params_text = params.dump();
    gradus_status status = gradus_run(ctx, command.c_str(), params_text.c_str(), &report);
    if (status != GRADUS_OK) {
        std::cerr << "error: " << gradus_last_error(ctx) << "\n";
        gradus_context_free(ctx);
        return status;
    }
    const char* text = gradus_report_json(report);
    if (output == "json") {
        std::cout << text;
    } else {
        json doc = json::parse(text);
        std::cout << "command: " << doc["command"].get<std::string>() << "\n";
        std::cout << "field: " << doc["field"].get<std::string>() << "\n";
        std::cout << "seed: " << doc["seed"].dump() << "\n";
        std::cout << "results:\n";
        print_text(doc["results"], 1, std::cout);
        if (!doc["certificates"].empty()) {
            std::cout << "certificates:\n";
            print_text(doc["certificates"], 1, std::cout);
        }
        if (doc.contains("timing")) std::cout << "wall_seconds: " << doc["timing"]["wall_seconds"].dump() << "\n";
    }
    gradus_report_free(report);
    gradus_context_free(ctx);
    return GRADUS_OK;
}
