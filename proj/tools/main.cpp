// Command-line surface for the zetalogic library: formula evaluation and
// truth tables, law reports, square-of-opposition verdicts and case
// studies, and zeta evaluation by four methods.
//
// Exit codes: 0 success, 2 parse error, 3 semantic error, 4 out of domain.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetalogic/errors.hpp"
#include "zetalogic/formula.hpp"
#include "zetalogic/logic.hpp"
#include "zetalogic/square.hpp"
#include "zetalogic/zeta.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitDomain = 4;

using nlohmann::ordered_json;

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

[[noreturn]] void fail(int code, const std::string& message) {
    std::cerr << "error: " << message << '\n';
    std::exit(code);
}

const zetalogic::LogicSystem& require_logic(const std::string& name) {
    const zetalogic::LogicSystem* logic = zetalogic::find_logic(name);
    if (logic == nullptr) {
        std::string names;
        for (const std::string& n : zetalogic::builtin_logic_names()) {
            if (!names.empty()) names += ", ";
            names += n;
        }
        fail(kExitSemantic,
             "unknown logic '" + name + "'; builtin logics: " + names);
    }
    return *logic;
}

zetalogic::Formula require_formula(const std::string& text) {
    try {
        return zetalogic::parse_formula(text);
    } catch (const zetalogic::ParseError& e) {
        fail(kExitParse, std::string("cannot parse formula: ") + e.what());
    }
}

zetalogic::Complex parse_complex(const std::string& text) {
    const std::size_t comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            return {std::stod(text), 0.0};
        }
        return {std::stod(text.substr(0, comma)),
                std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        fail(kExitParse, "cannot parse complex value '" + text +
                             "'; expected \"re\" or \"re,im\"");
    }
}

struct Range {
    double lo, hi;
    int count;
};

Range parse_range(const std::string& text) {
    Range r{};
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                   : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        fail(kExitParse,
             "cannot parse range '" + text + "'; expected \"min:max:count\"");
    }
    try {
        r.lo = std::stod(text.substr(0, c1));
        r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        r.count = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        fail(kExitParse,
             "cannot parse range '" + text + "'; expected \"min:max:count\"");
    }
    if (r.count <= 0) {
        fail(kExitParse, "range '" + text + "' must have a positive count");
    }
    return r;
}

zetalogic::Valuation parse_assignments(const std::vector<std::string>& pairs) {
    zetalogic::Valuation v;
    for (const std::string& pair : pairs) {
        const std::size_t eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= pair.size()) {
            fail(kExitParse,
                 "cannot parse assignment '" + pair + "'; expected atom=VALUE");
        }
        const std::string atom = pair.substr(0, eq);
        const std::string value = pair.substr(eq + 1);
        if (value.size() != 1) {
            fail(kExitParse, "assignment value in '" + pair +
                                 "' must be one of T, X, F");
        }
        const auto tv = zetalogic::truth_value_from_char(value[0]);
        if (!tv) {
            fail(kExitParse, "assignment value in '" + pair +
                                 "' must be one of T, X, F");
        }
        v[atom] = *tv;
    }
    return v;
}

void emit(const std::string& text) { std::cout << text; }

// ── logic subcommands ───────────────────────────────────────────────────────

int run_logic_eval(const Options& opt, const std::string& formula_text,
                   const std::string& logic_name,
                   const std::vector<std::string>& assigns) {
    const auto& logic = require_logic(logic_name);
    const zetalogic::Formula f = require_formula(formula_text);
    const zetalogic::Valuation v = parse_assignments(assigns);
    const zetalogic::TruthValue value = zetalogic::eval(f, v, logic);
    if (opt.json()) {
        ordered_json j;
        j["formula"] = zetalogic::render(f);
        j["logic"] = logic.name;
        ordered_json a = ordered_json::object();
        for (const auto& [name, tv] : v) {
            a[name] = std::string(1, zetalogic::to_char(tv));
        }
        j["assignment"] = std::move(a);
        j["value"] = std::string(1, zetalogic::to_char(value));
        if (logic.gap_semantics && value == zetalogic::TV_X) {
            j["gloss"] = "no truth value (gap)";
        }
        emit(j.dump() + "\n");
    } else {
        std::string line(1, zetalogic::to_char(value));
        if (logic.gap_semantics && value == zetalogic::TV_X) {
            line += " (no truth value)";
        }
        emit(line + "\n");
    }
    return kExitOk;
}

int run_logic_table(const Options& opt, const std::string& formula_text,
                    const std::string& logic_name) {
    const auto& logic = require_logic(logic_name);
    const zetalogic::Formula f = require_formula(formula_text);
    const zetalogic::TruthTable table = zetalogic::truth_table(f, logic);
    emit(opt.json() ? zetalogic::to_json(table) + "\n"
                    : zetalogic::to_text(table));
    return kExitOk;
}

int run_logic_taut(const Options& opt, const std::string& formula_text,
                   const std::string& logic_name) {
    const auto& logic = require_logic(logic_name);
    const zetalogic::Formula f = require_formula(formula_text);
    const auto witness = zetalogic::tautology_counterexample(f, logic);
    if (opt.json()) {
        ordered_json j;
        j["formula"] = zetalogic::render(f);
        j["logic"] = logic.name;
        j["tautology"] = !witness.has_value();
        if (witness) {
            ordered_json w = ordered_json::object();
            for (const auto& [name, tv] : *witness) {
                w[name] = std::string(1, zetalogic::to_char(tv));
            }
            j["witness"] = std::move(w);
        }
        emit(j.dump() + "\n");
    } else if (witness) {
        emit("false (witness " + zetalogic::format_valuation(*witness) + ")\n");
    } else {
        emit("true\n");
    }
    return kExitOk;
}

int run_logic_entails(const Options& opt, const std::string& conclusion_text,
                      const std::string& logic_name,
                      const std::vector<std::string>& premise_texts) {
    const auto& logic = require_logic(logic_name);
    std::vector<zetalogic::Formula> premises;
    premises.reserve(premise_texts.size());
    for (const std::string& p : premise_texts) {
        premises.push_back(require_formula(p));
    }
    const zetalogic::Formula conclusion = require_formula(conclusion_text);
    const auto witness =
        zetalogic::entailment_counterexample(premises, conclusion, logic);
    if (opt.json()) {
        ordered_json j;
        ordered_json ps = ordered_json::array();
        for (const auto& p : premises) ps.push_back(zetalogic::render(p));
        j["premises"] = std::move(ps);
        j["conclusion"] = zetalogic::render(conclusion);
        j["logic"] = logic.name;
        j["entails"] = !witness.has_value();
        if (witness) {
            ordered_json w = ordered_json::object();
            for (const auto& [name, tv] : *witness) {
                w[name] = std::string(1, zetalogic::to_char(tv));
            }
            j["witness"] = std::move(w);
        }
        emit(j.dump() + "\n");
    } else if (witness) {
        emit("false (witness " + zetalogic::format_valuation(*witness) + ")\n");
    } else {
        emit("true\n");
    }
    return kExitOk;
}

int run_logic_laws(const Options& opt, const std::string& logic_name) {
    const auto& logic = require_logic(logic_name);
    const zetalogic::LawReport report = zetalogic::classify_laws(logic);
    emit(opt.json() ? zetalogic::to_json(report) + "\n"
                    : zetalogic::to_text(report));
    return kExitOk;
}

// ── square subcommand ───────────────────────────────────────────────────────

int run_square(const Options& opt, const std::string& model_path,
               const std::string& builtin, const std::string& subject,
               const std::string& predicate, const std::string& ac,
               const std::string& logic_name, const std::string& reading) {
    if (!builtin.empty()) {
        if (builtin == "pnp") {
            const zetalogic::PnpResult result = zetalogic::case_study_pnp();
            emit(opt.json() ? zetalogic::to_json(result) + "\n"
                            : zetalogic::to_text(result));
            return kExitOk;
        }
        if (builtin == "rh") {
            if (ac != "true" && ac != "false") {
                fail(kExitParse, "--builtin rh requires --ac true|false");
            }
            const zetalogic::RhReading rh_reading =
                reading == "conjunction" ? zetalogic::RhReading::Conjunction
                                         : zetalogic::RhReading::Conditional;
            const zetalogic::CaseVerdict verdict = zetalogic::case_study_rh(
                ac == "true", logic_name, rh_reading);
            emit(opt.json() ? zetalogic::to_json(verdict) + "\n"
                            : zetalogic::to_text(verdict));
            return kExitOk;
        }
        fail(kExitSemantic,
             "unknown builtin '" + builtin + "'; expected pnp or rh");
    }
    if (model_path.empty()) {
        fail(kExitParse, "square requires --model FILE or --builtin NAME");
    }
    std::ifstream in(model_path);
    if (!in) {
        fail(kExitParse, "cannot open model file '" + model_path + "'");
    }
    zetalogic::FiniteModel model;
    try {
        model = zetalogic::FiniteModel::parse(in);
    } catch (const zetalogic::ParseError& e) {
        fail(kExitParse, std::string("cannot parse model: ") + e.what());
    } catch (const zetalogic::SemanticError& e) {
        fail(kExitParse, std::string("model is not well-formed: ") + e.what());
    }
    if (subject.empty() || predicate.empty()) {
        fail(kExitParse, "square --model requires --subject and --predicate");
    }
    const zetalogic::SquareVerdict verdict =
        zetalogic::square_report(subject, predicate, model);
    emit(opt.json() ? zetalogic::to_json(verdict) + "\n"
                    : zetalogic::to_text(verdict));
    return kExitOk;
}

// ── zeta subcommands ────────────────────────────────────────────────────────

int finish_series(const Options& opt, const zetalogic::SeriesResult& result,
                  zetalogic::Complex s, std::string_view method) {
    emit(opt.json() ? zetalogic::to_json(result, s, method) + "\n"
                    : zetalogic::to_text(result, s, method));
    if (result.status == zetalogic::SeriesStatus::OutOfDomain) {
        std::cerr << "out of domain: " << result.note << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

int run_zeta_value(const Options& opt, const std::string& s_text,
                   const std::string& method_name, std::uint64_t n_terms,
                   std::uint64_t prime_bound, double tol, int em_m, int em_n) {
    const zetalogic::Complex s = parse_complex(s_text);
    const zetalogic::ZetaMethod* method =
        zetalogic::method_from_name(method_name);
    if (method == nullptr) {
        fail(kExitSemantic, "unknown method '" + method_name +
                                "'; expected dirichlet, euler_product, eta or "
                                "euler_maclaurin");
    }
    zetalogic::SeriesResult result;
    switch (*method) {
        case zetalogic::ZetaMethod::Dirichlet:
            result = zetalogic::dirichlet_partial(s, n_terms);
            break;
        case zetalogic::ZetaMethod::EulerProduct:
            result = zetalogic::euler_product_partial(s, prime_bound);
            break;
        case zetalogic::ZetaMethod::Eta:
            result = zetalogic::eta_zeta(s, tol);
            break;
        case zetalogic::ZetaMethod::EulerMaclaurin:
            result = zetalogic::em_zeta(s, {em_m, em_n});
            break;
    }
    return finish_series(opt, result, s, zetalogic::to_string(*method));
}

int run_zeta_map(const std::string& re_range, const std::string& im_range,
                 const std::string& method_name, int em_m,
                 const std::string& out_path) {
    const Range re = parse_range(re_range);
    const Range im = parse_range(im_range);
    const zetalogic::ZetaMethod* method =
        zetalogic::method_from_name(method_name);
    if (method == nullptr) {
        fail(kExitSemantic, "unknown method '" + method_name + "'");
    }
    const zetalogic::GridSpec grid{re.lo, re.hi, re.count,
                                   im.lo, im.hi, im.count};
    const zetalogic::RegionMap map = zetalogic::region_map(grid, *method, em_m);
    const std::string csv = zetalogic::to_csv(map);
    if (out_path.empty()) {
        emit(csv);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            fail(kExitParse, "cannot open output file '" + out_path + "'");
        }
        out << csv;
    }
    return kExitOk;
}

int run_zeta_verify(const Options& opt, double s, double tol) {
    const zetalogic::IntegralCheck check = zetalogic::bose_integral_check(s, tol);
    if (opt.json()) {
        ordered_json j;
        j["s"] = s;
        j["integral"] = check.integral;
        j["gamma_times_zeta"] = check.gamma_times_zeta;
        j["difference"] = check.difference;
        emit(j.dump() + "\n");
    } else {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "integral: %.17g\ngamma_times_zeta: %.17g\n"
                      "difference: %.3g\n",
                      check.integral, check.gamma_times_zeta, check.difference);
        emit(buf);
    }
    return kExitOk;
}

int run_zeta_bernoulli(const Options& opt, int k) {
    const zetalogic::Rational b = zetalogic::bernoulli_number(k);
    std::ostringstream num, den;
    num << boost::multiprecision::numerator(b);
    den << boost::multiprecision::denominator(b);
    if (opt.json()) {
        ordered_json j;
        j["k"] = k;
        j["numerator"] = num.str();
        j["denominator"] = den.str();
        emit(j.dump() + "\n");
    } else {
        emit("B_" + std::to_string(k) + " = " + num.str() + "/" + den.str() +
             "\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"many-valued logic and zeta evaluation toolkit"};
    app.fallthrough();
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format,-f", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // logic
    CLI::App* logic = app.add_subcommand("logic", "propositional logic core");
    logic->require_subcommand(1);
    std::string formula_text, logic_name = "classical", conclusion_text;
    std::vector<std::string> assigns, premises;

    CLI::App* logic_eval = logic->add_subcommand("eval", "evaluate a formula");
    logic_eval->add_option("formula", formula_text)->required();
    logic_eval->add_option("--logic", logic_name);
    logic_eval->add_option("--assign", assigns, "atom=VALUE assignments");

    CLI::App* logic_table = logic->add_subcommand("table", "full truth table");
    logic_table->add_option("formula", formula_text)->required();
    logic_table->add_option("--logic", logic_name);

    CLI::App* logic_taut =
        logic->add_subcommand("taut", "designated-value tautology check");
    logic_taut->add_option("formula", formula_text)->required();
    logic_taut->add_option("--logic", logic_name);

    CLI::App* logic_entails =
        logic->add_subcommand("entails", "designated-value entailment");
    logic_entails->add_option("conclusion", conclusion_text)->required();
    logic_entails->add_option("--premise", premises, "premise formula");
    logic_entails->add_option("--logic", logic_name);

    CLI::App* logic_laws = logic->add_subcommand("laws", "classical-law report");
    logic_laws->add_option("--logic", logic_name);

    // square
    CLI::App* square =
        app.add_subcommand("square", "square-of-opposition evaluation");
    std::string model_path, builtin, subject, predicate, ac;
    std::string case_logic = "classical", reading = "conditional";
    square->add_option("--model", model_path, "finite model file");
    square->add_option("--builtin", builtin, "builtin case study: pnp or rh");
    square->add_option("--subject", subject);
    square->add_option("--predicate", predicate);
    square->add_option("--ac", ac, "analytic continuation taken as true/false")
        ->check(CLI::IsMember({"true", "false"}));
    square->add_option("--logic", case_logic,
                       "classical|intuitionistic|lp|bochvar");
    square->add_option("--reading", reading, "conditional|conjunction")
        ->check(CLI::IsMember({"conditional", "conjunction"}));

    // zeta
    CLI::App* zeta = app.add_subcommand("zeta", "zeta evaluation core");
    zeta->require_subcommand(1);
    std::string s_text, method_name = "euler_maclaurin";
    std::string re_range, im_range, out_path;
    std::uint64_t n_terms = 10000, prime_bound = 100000;
    double tol = 1e-10, quad_tol = 1e-10, s_real = 2.0;
    int em_m = 5, em_n = 20, bernoulli_k = 0;

    CLI::App* zeta_value = zeta->add_subcommand("value", "evaluate at one point");
    zeta_value->add_option("-s,--s", s_text, "point as \"re,im\"")->required();
    zeta_value->add_option("--method", method_name,
                           "dirichlet|euler_product|eta|euler_maclaurin");
    zeta_value->add_option("-N,--terms", n_terms, "dirichlet term count");
    zeta_value->add_option("--prime-bound", prime_bound);
    zeta_value->add_option("--tol", tol, "eta tolerance");
    zeta_value->add_option("--m", em_m, "euler-maclaurin correction terms");
    zeta_value->add_option("--n", em_n, "euler-maclaurin cutoff");

    CLI::App* zeta_map = zeta->add_subcommand("map", "status map over a grid");
    zeta_map->add_option("--re", re_range, "min:max:count")->required();
    zeta_map->add_option("--im", im_range, "min:max:count")->required();
    zeta_map->add_option("--method", method_name)->required();
    zeta_map->add_option("--m", em_m, "euler-maclaurin correction terms");
    zeta_map->add_option("--out", out_path, "CSV output path (default stdout)");

    CLI::App* zeta_verify = zeta->add_subcommand(
        "verify-derivation", "integral identity check for real s > 1");
    zeta_verify->add_option("-s,--s", s_real)->required();
    zeta_verify->add_option("--tol", quad_tol, "quadrature tolerance");

    CLI::App* zeta_bernoulli =
        zeta->add_subcommand("bernoulli", "exact bernoulli number");
    zeta_bernoulli->add_option("k", bernoulli_k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (logic_eval->parsed()) {
            return run_logic_eval(opt, formula_text, logic_name, assigns);
        }
        if (logic_table->parsed()) {
            return run_logic_table(opt, formula_text, logic_name);
        }
        if (logic_taut->parsed()) {
            return run_logic_taut(opt, formula_text, logic_name);
        }
        if (logic_entails->parsed()) {
            return run_logic_entails(opt, conclusion_text, logic_name, premises);
        }
        if (logic_laws->parsed()) {
            return run_logic_laws(opt, logic_name);
        }
        if (square->parsed()) {
            return run_square(opt, model_path, builtin, subject, predicate, ac,
                              case_logic, reading);
        }
        if (zeta_value->parsed()) {
            return run_zeta_value(opt, s_text, method_name, n_terms,
                                  prime_bound, tol, em_m, em_n);
        }
        if (zeta_map->parsed()) {
            return run_zeta_map(re_range, im_range, method_name, em_m, out_path);
        }
        if (zeta_verify->parsed()) {
            return run_zeta_verify(opt, s_real, quad_tol);
        }
        if (zeta_bernoulli->parsed()) {
            return run_zeta_bernoulli(opt, bernoulli_k);
        }
    } catch (const zetalogic::ParseError& e) {
        fail(kExitParse, e.what());
    } catch (const zetalogic::SemanticError& e) {
        fail(kExitSemantic, e.what());
    } catch (const zetalogic::DomainError& e) {
        fail(kExitDomain, e.what());
    } catch (const std::invalid_argument& e) {
        fail(kExitParse, e.what());
    }
    return kExitOk;
}
