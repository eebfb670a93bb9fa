#include "zetalogic/logic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "zetalogic/errors.hpp"

namespace zetalogic {

namespace {

constexpr TruthValue T = TV_T;
constexpr TruthValue X = TV_X;
constexpr TruthValue F = TV_F;

constexpr UnaryTable kIdentity = {T, X, F};
constexpr UnaryTable kNot = {F, X, T};

// Strict third-value propagation: classical on {T,F}, any X in gives X out.
// These are the gap tables and the internal "meaningless" tables alike.
constexpr BinaryTable kStrictAnd = {{{T, X, F}, {X, X, X}, {F, X, F}}};
constexpr BinaryTable kStrictOr = {{{T, X, T}, {X, X, X}, {T, X, F}}};
constexpr BinaryTable kStrictImplies = {{{T, X, F}, {X, X, X}, {T, X, T}}};
constexpr BinaryTable kStrictIff = {{{T, X, F}, {X, X, X}, {F, X, T}}};

// Strong tables: X absorbs only when the classical inputs leave the result
// open (F dominates And, T dominates Or).
constexpr BinaryTable kStrongAnd = {{{T, X, F}, {X, X, F}, {F, F, F}}};
constexpr BinaryTable kStrongOr = {{{T, T, T}, {T, X, X}, {T, X, F}}};
constexpr BinaryTable kStrongImplies = {{{T, X, F}, {T, X, X}, {T, T, T}}};

// "Means the same as": crisp value-identity biconditional.
constexpr BinaryTable kCrispIff = {{{T, F, F}, {F, T, F}, {F, F, T}}};

// Lukasiewicz conditional: X -> X is T. Biconditional is the closure
// (p -> q) & (q -> p) over this conditional and the strong And.
constexpr BinaryTable kLukasiewiczImplies = {{{T, X, F}, {T, T, X}, {T, T, T}}};
constexpr BinaryTable kLukasiewiczIff = {{{T, X, F}, {X, T, X}, {F, X, T}}};

// Bochvar's assertion column: "it is true that" maps X and F to F.
constexpr UnaryTable kBochvarAssert = {T, F, F};

std::vector<LogicSystem> make_builtins() {
    std::vector<LogicSystem> out;

    {
        LogicSystem classical;
        classical.name = "Classical2";
        classical.aliases = {"classical", "classical2", "cl2"};
        classical.values = {T, F};
        classical.designated = {T};
        classical.not_table = kNot;
        classical.assert_table = kIdentity;
        classical.and_table = kStrictAnd;
        classical.or_table = kStrictOr;
        classical.implies_table = kStrictImplies;
        classical.iff_table = kStrictIff;
        out.push_back(std::move(classical));
    }
    {
        LogicSystem frege;
        frege.name = "FregeGap";
        frege.aliases = {"frege", "frege-gap", "gap"};
        frege.values = {T, X, F};
        frege.designated = {T};
        frege.not_table = kNot;
        frege.assert_table = kIdentity;
        frege.and_table = kStrictAnd;
        frege.or_table = kStrictOr;
        frege.implies_table = kStrictImplies;
        frege.iff_table = kStrictIff;
        frege.gap_semantics = true;
        frege.third_gloss = "gap (no truth value)";
        out.push_back(std::move(frege));
    }
    {
        LogicSystem k3;
        k3.name = "KleeneK3";
        k3.aliases = {"k3", "kleene", "kleene-k3"};
        k3.values = {T, X, F};
        k3.designated = {T};
        k3.not_table = kNot;
        k3.assert_table = kIdentity;
        k3.and_table = kStrongAnd;
        k3.or_table = kStrongOr;
        k3.implies_table = kStrongImplies;
        k3.iff_table = kCrispIff;
        k3.third_gloss = "unknown";
        out.push_back(std::move(k3));
    }
    {
        LogicSystem lp;
        lp.name = "PriestLP";
        lp.aliases = {"lp", "priest", "priest-lp"};
        lp.values = {T, X, F};
        lp.designated = {T, X};
        lp.not_table = kNot;
        lp.assert_table = kIdentity;
        lp.and_table = kStrongAnd;
        lp.or_table = kStrongOr;
        lp.implies_table = kStrongImplies;
        lp.iff_table = kCrispIff;
        lp.third_gloss = "both true and false (glut)";
        out.push_back(std::move(lp));
    }
    {
        LogicSystem l3;
        l3.name = "Lukasiewicz3";
        l3.aliases = {"l3", "lukasiewicz", "lukasiewicz3"};
        l3.values = {T, X, F};
        l3.designated = {T};
        l3.not_table = kNot;
        l3.assert_table = kIdentity;
        l3.and_table = kStrongAnd;
        l3.or_table = kStrongOr;
        l3.implies_table = kLukasiewiczImplies;
        l3.iff_table = kLukasiewiczIff;
        l3.third_gloss = "indeterminate (possible)";
        out.push_back(std::move(l3));
    }
    {
        LogicSystem bochvar;
        bochvar.name = "BochvarInternal";
        bochvar.aliases = {"bochvar", "bochvar-internal", "b3"};
        bochvar.values = {T, X, F};
        bochvar.designated = {T};
        bochvar.not_table = kNot;
        bochvar.assert_table = kBochvarAssert;
        bochvar.and_table = kStrictAnd;
        bochvar.or_table = kStrictOr;
        bochvar.implies_table = kStrictImplies;
        bochvar.iff_table = kStrictIff;
        bochvar.third_gloss = "meaningless";
        out.push_back(std::move(bochvar));
    }
    return out;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::size_t index_of(TruthValue v) { return static_cast<std::size_t>(v); }

}  // namespace

char to_char(TruthValue v) {
    switch (v) {
        case TV_T: return 'T';
        case TV_X: return 'X';
        case TV_F: return 'F';
    }
    return '?';
}

std::optional<TruthValue> truth_value_from_char(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'T': return TV_T;
        case 'X': return TV_X;
        case 'F': return TV_F;
        default: return std::nullopt;
    }
}

bool LogicSystem::has_value(TruthValue v) const {
    return std::find(values.begin(), values.end(), v) != values.end();
}

bool LogicSystem::is_designated(TruthValue v) const {
    return std::find(designated.begin(), designated.end(), v) != designated.end();
}

TruthValue LogicSystem::apply_unary(Formula::Kind k, TruthValue v) const {
    const std::size_t i = index_of(v);
    switch (k) {
        case Formula::Kind::Not: return not_table[i];
        case Formula::Kind::Assert: return assert_table[i];
        default: throw SemanticError("apply_unary: not a unary connective");
    }
}

TruthValue LogicSystem::apply_binary(Formula::Kind k, TruthValue a,
                                     TruthValue b) const {
    const std::size_t i = index_of(a);
    const std::size_t j = index_of(b);
    switch (k) {
        case Formula::Kind::And: return and_table[i][j];
        case Formula::Kind::Or: return or_table[i][j];
        case Formula::Kind::Implies: return implies_table[i][j];
        case Formula::Kind::Iff: return iff_table[i][j];
        default: throw SemanticError("apply_binary: not a binary connective");
    }
}

const std::vector<LogicSystem>& builtin_logics() {
    static const std::vector<LogicSystem> systems = make_builtins();
    return systems;
}

const LogicSystem* find_logic(std::string_view name_or_alias) {
    const std::string key = lower(name_or_alias);
    for (const LogicSystem& logic : builtin_logics()) {
        if (lower(logic.name) == key) return &logic;
        for (const std::string& alias : logic.aliases) {
            if (alias == key) return &logic;
        }
    }
    return nullptr;
}

std::vector<std::string> builtin_logic_names() {
    std::vector<std::string> names;
    for (const LogicSystem& logic : builtin_logics()) names.push_back(logic.name);
    return names;
}

TruthValue eval(const Formula& f, const Valuation& v, const LogicSystem& logic) {
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            auto it = v.find(f.atom_name());
            if (it == v.end()) {
                throw SemanticError("valuation is missing atom '" + f.atom_name() +
                                    "'");
            }
            if (!logic.has_value(it->second)) {
                throw SemanticError(std::string("value '") + to_char(it->second) +
                                    "' for atom '" + f.atom_name() +
                                    "' is outside logic " + logic.name);
            }
            return it->second;
        }
        case Formula::Kind::Not:
        case Formula::Kind::Assert:
            return logic.apply_unary(f.kind(), eval(f.operand(), v, logic));
        default:
            return logic.apply_binary(f.kind(), eval(f.lhs(), v, logic),
                                      eval(f.rhs(), v, logic));
    }
}

namespace {

// Enumerates all valuations over `names` in lexicographic order (first atom
// slowest) with per-atom value order following logic.values (T < X < F).
// Calls visit(inputs, valuation); stops early when visit returns false.
template <typename Visit>
void for_each_valuation(const std::vector<std::string>& names,
                        const LogicSystem& logic, Visit&& visit) {
    const std::size_t arity = logic.values.size();
    std::vector<std::size_t> digits(names.size(), 0);
    std::vector<TruthValue> inputs(names.size(), TV_T);
    Valuation v;
    for (;;) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            inputs[i] = logic.values[digits[i]];
            v[names[i]] = inputs[i];
        }
        if (!visit(inputs, v)) return;
        std::size_t pos = names.size();
        while (pos > 0) {
            --pos;
            if (++digits[pos] < arity) break;
            digits[pos] = 0;
            if (pos == 0) return;
        }
        if (names.empty()) return;
    }
}

void check_atom_guard(std::size_t count) {
    if (count == 0) {
        throw SemanticError("formula has no atoms");
    }
    if (count > kMaxTableAtoms) {
        std::ostringstream msg;
        msg << "formula has " << count << " atoms; truth-table enumeration is "
            << "capped at " << kMaxTableAtoms;
        throw SemanticError(msg.str());
    }
}

}  // namespace

TruthTable truth_table(const Formula& f, const LogicSystem& logic) {
    TruthTable table;
    table.formula_text = render(f);
    table.logic_name = logic.name;
    table.atom_names = atoms(f);
    check_atom_guard(table.atom_names.size());
    table.designated_ok = true;
    for_each_valuation(table.atom_names, logic,
                       [&](const std::vector<TruthValue>& inputs,
                           const Valuation& v) {
                           TruthTableRow row;
                           row.inputs = inputs;
                           row.value = eval(f, v, logic);
                           row.designated = logic.is_designated(row.value);
                           table.designated_ok =
                               table.designated_ok && row.designated;
                           table.rows.push_back(std::move(row));
                           return true;
                       });
    return table;
}

std::optional<Valuation> tautology_counterexample(const Formula& f,
                                                  const LogicSystem& logic) {
    const std::vector<std::string> names = atoms(f);
    check_atom_guard(names.size());
    std::optional<Valuation> witness;
    for_each_valuation(names, logic,
                       [&](const std::vector<TruthValue>&, const Valuation& v) {
                           if (!logic.is_designated(eval(f, v, logic))) {
                               witness = v;
                               return false;
                           }
                           return true;
                       });
    return witness;
}

bool is_tautology(const Formula& f, const LogicSystem& logic) {
    return !tautology_counterexample(f, logic).has_value();
}

std::optional<Valuation> entailment_counterexample(
    const std::vector<Formula>& premises, const Formula& conclusion,
    const LogicSystem& logic) {
    std::vector<std::string> names;
    auto merge = [&names](const Formula& f) {
        for (const std::string& a : atoms(f)) {
            if (std::find(names.begin(), names.end(), a) == names.end()) {
                names.push_back(a);
            }
        }
    };
    for (const Formula& p : premises) merge(p);
    merge(conclusion);
    check_atom_guard(names.size());

    std::optional<Valuation> witness;
    for_each_valuation(names, logic,
                       [&](const std::vector<TruthValue>&, const Valuation& v) {
                           for (const Formula& p : premises) {
                               if (!logic.is_designated(eval(p, v, logic))) {
                                   return true;  // premise not designated
                               }
                           }
                           if (!logic.is_designated(eval(conclusion, v, logic))) {
                               witness = v;
                               return false;
                           }
                           return true;
                       });
    return witness;
}

bool entails(const std::vector<Formula>& premises, const Formula& conclusion,
             const LogicSystem& logic) {
    return !entailment_counterexample(premises, conclusion, logic).has_value();
}

LawReport classify_laws(const LogicSystem& logic) {
    LawReport report;
    report.logic_name = logic.name;
    report.third_gloss = logic.third_gloss;

    auto check_tautology = [&](const char* law, const char* text) {
        const Formula f = parse_formula(text);
        LawResult r;
        r.law = law;
        r.statement = text;
        r.witness = tautology_counterexample(f, logic);
        r.holds = !r.witness.has_value();
        report.laws.push_back(std::move(r));
    };

    check_tautology("LOI", "p <-> p");
    check_tautology("LEM", "p | !p");
    check_tautology("LNC", "!(p & !p)");
    check_tautology("DN", "!!p <-> p");

    {
        LawResult r;
        r.law = "ECQ";
        r.statement = "p, !p |= q";
        const std::vector<Formula> premises = {parse_formula("p"),
                                               parse_formula("!p")};
        r.witness = entailment_counterexample(premises, parse_formula("q"), logic);
        r.holds = !r.witness.has_value();
        report.laws.push_back(std::move(r));
    }

    check_tautology("DeM1", "!(p & q) <-> (!p | !q)");
    check_tautology("DeM2", "!(p | q) <-> (!p & !q)");
    return report;
}

// ── Serialization ───────────────────────────────────────────────────────────

std::string format_valuation(const Valuation& v) {
    std::string out;
    for (const auto& [name, value] : v) {
        if (!out.empty()) out += ", ";
        out += name;
        out += '=';
        out += to_char(value);
    }
    return out;
}

std::string to_text(const TruthTable& table) {
    std::ostringstream out;
    std::vector<std::size_t> widths;
    for (const std::string& a : table.atom_names) {
        widths.push_back(std::max<std::size_t>(a.size(), 1));
    }
    for (std::size_t i = 0; i < table.atom_names.size(); ++i) {
        out << table.atom_names[i];
        out << std::string(widths[i] - table.atom_names[i].size() + 2, ' ');
    }
    out << "| " << table.formula_text << '\n';
    for (const TruthTableRow& row : table.rows) {
        for (std::size_t i = 0; i < row.inputs.size(); ++i) {
            out << to_char(row.inputs[i]) << std::string(widths[i] + 1, ' ');
        }
        out << "| " << to_char(row.value);
        if (row.designated) out << " *";
        out << '\n';
    }
    out << "logic: " << table.logic_name;
    const LogicSystem* logic = find_logic(table.logic_name);
    if (logic != nullptr && !logic->third_gloss.empty()) {
        out << "   (X = " << logic->third_gloss << ")";
    }
    out << '\n';
    out << "designated rows marked *; all designated: "
        << (table.designated_ok ? "yes" : "no") << '\n';
    return out.str();
}

namespace {

nlohmann::ordered_json valuation_json(const std::vector<std::string>& names,
                                      const std::vector<TruthValue>& inputs) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < names.size(); ++i) {
        j[names[i]] = std::string(1, to_char(inputs[i]));
    }
    return j;
}

}  // namespace

std::string to_json(const TruthTable& table) {
    nlohmann::ordered_json j;
    j["formula"] = table.formula_text;
    j["logic"] = table.logic_name;
    j["rows"] = nlohmann::ordered_json::array();
    for (const TruthTableRow& row : table.rows) {
        nlohmann::ordered_json r;
        r["inputs"] = valuation_json(table.atom_names, row.inputs);
        r["value"] = std::string(1, to_char(row.value));
        r["designated"] = row.designated;
        j["rows"].push_back(std::move(r));
    }
    j["designated_ok"] = table.designated_ok;
    return j.dump();
}

std::string to_text(const LawReport& report) {
    std::ostringstream out;
    out << "logic: " << report.logic_name;
    if (!report.third_gloss.empty()) out << "   (X = " << report.third_gloss << ")";
    out << '\n';
    std::size_t law_w = 0;
    std::size_t stmt_w = 0;
    for (const LawResult& r : report.laws) {
        law_w = std::max(law_w, r.law.size());
        stmt_w = std::max(stmt_w, r.statement.size());
    }
    for (const LawResult& r : report.laws) {
        out << r.law << std::string(law_w - r.law.size() + 2, ' ');
        out << r.statement << std::string(stmt_w - r.statement.size() + 2, ' ');
        out << (r.holds ? "holds" : "fails");
        if (r.witness) out << "  (witness " << format_valuation(*r.witness) << ")";
        out << '\n';
    }
    return out.str();
}

std::string to_json(const LawReport& report) {
    nlohmann::ordered_json j;
    j["logic"] = report.logic_name;
    j["third_value"] = report.third_gloss;
    j["laws"] = nlohmann::ordered_json::array();
    for (const LawResult& r : report.laws) {
        nlohmann::ordered_json lr;
        lr["law"] = r.law;
        lr["statement"] = r.statement;
        lr["holds"] = r.holds;
        if (r.witness) {
            nlohmann::ordered_json w = nlohmann::ordered_json::object();
            for (const auto& [name, value] : *r.witness) {
                w[name] = std::string(1, to_char(value));
            }
            lr["witness"] = std::move(w);
        }
        j["laws"].push_back(std::move(lr));
    }
    return j.dump();
}

}  // namespace zetalogic
