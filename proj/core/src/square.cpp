#include "zetalogic/square.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "zetalogic/errors.hpp"
#include "zetalogic/logic.hpp"

namespace zetalogic {

namespace {

const std::set<std::string>& extension(const FiniteModel& m,
                                       const std::string& name) {
    auto it = m.predicates.find(name);
    if (it == m.predicates.end()) {
        throw SemanticError("unknown predicate '" + name + "'");
    }
    return it->second;
}

bool subset_of(const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        if (*ia < *ib) ++ia; else ++ib;
    }
    return false;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

void FiniteModel::validate() const {
    std::set<std::string> seen;
    for (const std::string& e : domain) {
        if (!seen.insert(e).second) {
            throw SemanticError("duplicate domain element '" + e + "'");
        }
    }
    for (const auto& [name, ext] : predicates) {
        for (const std::string& e : ext) {
            if (seen.find(e) == seen.end()) {
                throw SemanticError("predicate '" + name + "' mentions '" + e +
                                    "' which is not in the domain");
            }
        }
    }
}

FiniteModel FiniteModel::parse(std::istream& in) {
    FiniteModel model;
    bool saw_domain = false;
    std::string line;
    std::size_t offset = 0;
    std::size_t line_start = 0;
    while (std::getline(in, line)) {
        line_start = offset;
        offset += line.size() + 1;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t colon = stripped.find(':');
        if (colon == std::string::npos) {
            throw ParseError("model line is missing ':'", line_start, {"':'"});
        }
        const std::string name = trim(stripped.substr(0, colon));
        if (name.empty()) {
            throw ParseError("model line has an empty name", line_start,
                             {"identifier"});
        }
        std::vector<std::string> items;
        std::string rest = stripped.substr(colon + 1);
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const std::string t = trim(item);
            if (!t.empty()) items.push_back(t);
        }
        if (name == "domain") {
            if (saw_domain) {
                throw ParseError("duplicate domain line", line_start, {});
            }
            saw_domain = true;
            model.domain = items;
        } else {
            if (model.predicates.count(name) != 0) {
                throw ParseError("duplicate predicate '" + name + "'",
                                 line_start, {});
            }
            model.predicates[name] =
                std::set<std::string>(items.begin(), items.end());
        }
    }
    if (!saw_domain) {
        throw ParseError("model has no 'domain:' line", 0, {"'domain:'"});
    }
    model.validate();
    return model;
}

FiniteModel FiniteModel::parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

bool eval_categorical(const CategoricalProposition& p, const FiniteModel& m) {
    const auto& subj = extension(m, p.subject);
    const auto& pred = extension(m, p.predicate);
    switch (p.form) {
        case Form::A: return subset_of(subj, pred);
        case Form::E: return !intersects(subj, pred);
        case Form::I: return intersects(subj, pred);
        case Form::O: return !subset_of(subj, pred);
    }
    throw SemanticError("unknown categorical form");
}

SquareVerdict square_report(const std::string& subject,
                            const std::string& predicate,
                            const FiniteModel& m) {
    SquareVerdict v;
    v.subject = subject;
    v.predicate = predicate;
    for (Form f : {Form::A, Form::E, Form::I, Form::O}) {
        v.truth[f] = eval_categorical({f, subject, predicate}, m);
    }
    v.vacuous_subject = extension(m, subject).empty();

    const bool a = v.truth.at(Form::A);
    const bool e = v.truth.at(Form::E);
    const bool i = v.truth.at(Form::I);
    const bool o = v.truth.at(Form::O);

    v.contradictories = (a != o && e != i) ? RelationStatus::Holds
                                           : RelationStatus::Fails;
    v.contraries = !(a && e) ? RelationStatus::Holds : RelationStatus::Fails;
    v.subcontraries = (i || o) ? RelationStatus::Holds : RelationStatus::Fails;
    v.subalternation = ((!a || i) && (!e || o)) ? RelationStatus::Holds
                                                : RelationStatus::Fails;
    v.paradox_flag = v.vacuous_subject && a && e;
    return v;
}

// ── P vs NP case study ──────────────────────────────────────────────────────

PnpResult case_study_pnp() {
    PnpResult result;
    // Two witness problems: one solvable in polynomial time, one (by the
    // argument's premises) verifiable but not solvable in polynomial time.
    // "Everything is verifiable in polynomial time" is encoded as an empty
    // not_NP extension.
    result.model.domain = {"CVP", "TSP"};
    result.model.predicates["P"] = {"CVP"};
    result.model.predicates["NP"] = {"CVP", "TSP"};
    result.model.predicates["not_P"] = {"TSP"};
    result.model.predicates["not_NP"] = {};
    result.model.validate();

    const std::pair<std::string, std::string> pairs[4] = {
        {"P", "NP"}, {"NP", "P"}, {"not_P", "not_NP"}, {"not_NP", "not_P"}};
    for (int idx = 0; idx < 4; ++idx) {
        const SquareVerdict sq =
            square_report(pairs[idx].first, pairs[idx].second, result.model);
        for (Form f : {Form::A, Form::E, Form::I, Form::O}) {
            PnpVerdict pv;
            pv.id = std::string(1, static_cast<char>(f)) +
                    std::to_string(idx + 1);
            pv.truth = sq.truth.at(f);
            result.verdicts.push_back(std::move(pv));
        }
        result.squares.push_back(sq);
    }
    result.a4_e4_paradox = result.squares[3].paradox_flag;
    result.conclusion = "P != NP under the paper's premises";
    return result;
}

// ── Zeta-hypothesis case study ──────────────────────────────────────────────

namespace {

// Sample model with an empty zero-set: two sample points, neither a zero,
// one on the critical line. Universal claims over "zero" are then vacuous.
FiniteModel vacuous_zero_model() {
    FiniteModel m;
    m.domain = {"s_on_line", "s_off_line"};
    m.predicates["zero"] = {};
    m.predicates["on_critical_line"] = {"s_on_line"};
    m.predicates["off_critical_line"] = {"s_off_line"};
    return m;
}

// The case-study cells are rule entries, but each is audited against the
// semantics it cites before it is reported.
void audit(bool ok, const char* what) {
    if (!ok) {
        throw SemanticError(std::string("case-study audit failed: ") + what);
    }
}

void audit_explosion_holds() {
    const LogicSystem& classical = *find_logic("classical");
    audit(entails({parse_formula("p"), parse_formula("!p")},
                  parse_formula("q"), classical),
          "explosion must hold in the two-valued system");
}

void audit_explosion_fails_lp() {
    const LogicSystem& lp = *find_logic("lp");
    audit(!entails({parse_formula("p"), parse_formula("!p")},
                   parse_formula("q"), lp),
          "explosion must fail under glut designation");
}

void audit_bochvar_propagation() {
    const LogicSystem& bochvar = *find_logic("bochvar");
    const Valuation v = {{"p", TV_X}, {"q", TV_T}};
    audit(eval(parse_formula("p -> q"), v, bochvar) == TV_X,
          "a meaningless antecedent must poison the implication");
}

}  // namespace

CaseVerdict case_study_rh(bool analytic_continuation_true,
                          std::string_view logic_name, RhReading reading) {
    std::string key(logic_name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    const bool classical = key == "classical";
    const bool intuitionistic = key == "intuitionistic";
    const bool lp = key == "lp";
    const bool bochvar = key == "bochvar";
    if (!classical && !intuitionistic && !lp && !bochvar) {
        throw SemanticError(
            "unknown logic '" + key +
            "' for the case study; expected classical, intuitionistic, lp or "
            "bochvar");
    }

    CaseVerdict out;
    if (analytic_continuation_true) {
        if (classical || intuitionistic) {
            audit_explosion_holds();
            out.verdict = "trivially-true-by-ECQ";
            out.justification =
                "convergent-and-divergent contradiction explodes: {p, !p} |= q "
                "holds in " +
                std::string(classical ? "Classical2" : "intuitionistic logic");
        } else {
            out.verdict = "third-value";
            if (lp) {
                audit_explosion_fails_lp();
                out.justification =
                    "contradiction takes the glut value in PriestLP; no "
                    "explosion ({p, !p} |= q fails)";
            } else {
                audit_bochvar_propagation();
                out.justification =
                    "contradiction is meaningless in BochvarInternal and "
                    "propagates X through every implication";
            }
        }
        return out;
    }

    // Analytic continuation taken as false: the zero-set is empty.
    if (reading == RhReading::Conjunction) {
        out.verdict = "false";
        out.justification =
            "conjunction reading: 'there are zeros' is false, so the "
            "conjunction and its mirrored variant are both false";
        return out;
    }
    if (classical) {
        out.verdict = "paradox";
        out.square = square_report("zero", "on_critical_line",
                                   vacuous_zero_model());
        out.justification =
            "vacuous subject: A and its contrary are both true on the empty "
            "zero-set, so the conditional reading and its mirror are both "
            "true; explosion follows";
    } else if (intuitionistic) {
        out.verdict = "false";
        out.justification =
            "no witness can be constructed for a zero, so the hypothesis is "
            "refused rather than vacuously affirmed";
    } else {
        out.verdict = "third-value";
        out.square = square_report("zero", "on_critical_line",
                                   vacuous_zero_model());
        audit(out.square->paradox_flag, "the empty zero-set must flag A and E");
        out.justification =
            "vacuous zeros make the conditional and its mirror both "
            "designated-true, a glut; the paradox takes the third value";
    }
    return out;
}

// ── Serialization ───────────────────────────────────────────────────────────

namespace {

const char* status_word(RelationStatus s) {
    return s == RelationStatus::Holds ? "holds" : "fails";
}

}  // namespace

std::string to_text(const SquareVerdict& v) {
    std::ostringstream out;
    out << "square: subject=" << v.subject << " predicate=" << v.predicate
        << '\n';
    for (Form f : {Form::A, Form::E, Form::I, Form::O}) {
        out << "  " << static_cast<char>(f) << ": "
            << (v.truth.at(f) ? "true" : "false") << '\n';
    }
    out << "  vacuous subject: " << (v.vacuous_subject ? "yes" : "no") << '\n';
    out << "  contradictories: " << status_word(v.contradictories) << '\n';
    out << "  contraries: " << status_word(v.contraries) << '\n';
    out << "  subcontraries: " << status_word(v.subcontraries) << '\n';
    out << "  subalternation: " << status_word(v.subalternation) << '\n';
    out << "  paradox: " << (v.paradox_flag ? "yes" : "no") << '\n';
    return out.str();
}

namespace {

nlohmann::ordered_json square_json(const SquareVerdict& v) {
    nlohmann::ordered_json j;
    j["subject"] = v.subject;
    j["predicate"] = v.predicate;
    nlohmann::ordered_json truth;
    for (Form f : {Form::A, Form::E, Form::I, Form::O}) {
        truth[std::string(1, static_cast<char>(f))] = v.truth.at(f);
    }
    j["truth"] = std::move(truth);
    j["vacuous_subject"] = v.vacuous_subject;
    j["relations"] = {
        {"contradictories", status_word(v.contradictories)},
        {"contraries", status_word(v.contraries)},
        {"subcontraries", status_word(v.subcontraries)},
        {"subalternation", status_word(v.subalternation)},
    };
    j["paradox"] = v.paradox_flag;
    return j;
}

}  // namespace

std::string to_json(const SquareVerdict& v) { return square_json(v).dump(); }

std::string to_text(const CaseVerdict& v) {
    std::ostringstream out;
    out << v.verdict << '\n';
    out << "justification: " << v.justification << '\n';
    if (v.square) out << to_text(*v.square);
    return out.str();
}

std::string to_json(const CaseVerdict& v) {
    nlohmann::ordered_json j;
    j["verdict"] = v.verdict;
    j["justification"] = v.justification;
    if (v.square) j["square"] = square_json(*v.square);
    return j.dump();
}

std::string to_text(const PnpResult& r) {
    std::ostringstream out;
    for (const PnpVerdict& v : r.verdicts) {
        out << v.id << ": " << (v.truth ? "true" : "false") << '\n';
    }
    out << "A4/E4 paradox: " << (r.a4_e4_paradox ? "yes" : "no") << '\n';
    out << r.conclusion << '\n';
    return out.str();
}

std::string to_json(const PnpResult& r) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    for (const PnpVerdict& v : r.verdicts) verdicts[v.id] = v.truth;
    j["verdicts"] = std::move(verdicts);
    j["squares"] = nlohmann::ordered_json::array();
    for (const SquareVerdict& sq : r.squares) j["squares"].push_back(square_json(sq));
    j["a4_e4_paradox"] = r.a4_e4_paradox;
    j["conclusion"] = r.conclusion;
    return j.dump();
}

}  // namespace zetalogic
