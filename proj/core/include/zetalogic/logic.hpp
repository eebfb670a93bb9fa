#ifndef ZETALOGIC_LOGIC_HPP
#define ZETALOGIC_LOGIC_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetalogic/formula.hpp"

namespace zetalogic {

// ── Truth values ────────────────────────────────────────────────────────────
// Shared three-value carrier. X is the system-relative third value; each
// LogicSystem says how to read it (gap / glut / unknown / meaningless).
// The fixed ordering T < X < F drives deterministic table output.

enum class TruthValue : unsigned char { True = 0, Third = 1, False = 2 };

inline constexpr TruthValue TV_T = TruthValue::True;
inline constexpr TruthValue TV_X = TruthValue::Third;
inline constexpr TruthValue TV_F = TruthValue::False;

char to_char(TruthValue v);
std::optional<TruthValue> truth_value_from_char(char c);

using UnaryTable = std::array<TruthValue, 3>;
using BinaryTable = std::array<std::array<TruthValue, 3>, 3>;

// ── LogicSystem ─────────────────────────────────────────────────────────────

struct LogicSystem {
    std::string name;                    // e.g. "KleeneK3"
    std::vector<std::string> aliases;    // lookup names, e.g. {"k3", "kleene"}
    std::vector<TruthValue> values;      // ordered subset of {T, X, F}
    std::vector<TruthValue> designated;  // nonempty, contains T
    UnaryTable not_table{};
    UnaryTable assert_table{};
    BinaryTable and_table{};
    BinaryTable or_table{};
    BinaryTable implies_table{};
    BinaryTable iff_table{};
    bool gap_semantics = false;   // X reported as "no truth value"
    std::string third_gloss;      // legend text for X, empty for two-valued

    bool has_value(TruthValue v) const;
    bool is_designated(TruthValue v) const;
    TruthValue apply_unary(Formula::Kind k, TruthValue v) const;
    TruthValue apply_binary(Formula::Kind k, TruthValue a, TruthValue b) const;
};

// The built-in systems, in fixed order:
//   Classical2, FregeGap, KleeneK3, PriestLP, Lukasiewicz3, BochvarInternal.
const std::vector<LogicSystem>& builtin_logics();

// Case-insensitive lookup by name or alias; nullptr when unknown.
const LogicSystem* find_logic(std::string_view name_or_alias);

// Canonical names of the built-in systems (for error messages).
std::vector<std::string> builtin_logic_names();

// ── Evaluation ──────────────────────────────────────────────────────────────

// Total map atom name -> value for the formula under evaluation.
using Valuation = std::map<std::string, TruthValue>;

// Bottom-up table evaluation. Throws SemanticError when an atom of `f` is
// missing from `v` or a value falls outside `logic.values`.
TruthValue eval(const Formula& f, const Valuation& v, const LogicSystem& logic);

struct TruthTableRow {
    std::vector<TruthValue> inputs;  // one per atom, in column order
    TruthValue value;
    bool designated;
};

struct TruthTable {
    std::string formula_text;
    std::string logic_name;
    std::vector<std::string> atom_names;   // first-occurrence order
    std::vector<TruthTableRow> rows;       // lexicographic, value order T<X<F
    bool designated_ok;                    // every row designated
};

inline constexpr std::size_t kMaxTableAtoms = 12;  // row explosion guard

// Enumerates all |values|^|atoms| valuations. Throws SemanticError for
// formulas with more than kMaxTableAtoms atoms.
TruthTable truth_table(const Formula& f, const LogicSystem& logic);

bool is_tautology(const Formula& f, const LogicSystem& logic);

// First valuation (in table order) whose result is not designated, if any.
std::optional<Valuation> tautology_counterexample(const Formula& f,
                                                  const LogicSystem& logic);

// True iff every valuation designating all premises designates the
// conclusion. Combined atom count is capped at kMaxTableAtoms.
bool entails(const std::vector<Formula>& premises, const Formula& conclusion,
             const LogicSystem& logic);

std::optional<Valuation> entailment_counterexample(
    const std::vector<Formula>& premises, const Formula& conclusion,
    const LogicSystem& logic);

// ── Law classification ──────────────────────────────────────────────────────

struct LawResult {
    std::string law;           // "LOI", "LEM", "LNC", "DN", "ECQ", "DeM1", "DeM2"
    std::string statement;     // formula text, or sequent text for ECQ
    bool holds;
    std::optional<Valuation> witness;  // failing valuation when !holds
};

struct LawReport {
    std::string logic_name;
    std::string third_gloss;
    std::vector<LawResult> laws;
};

// Checks LOI, LEM, LNC, double negation, ECQ and both De Morgan directions
// against the given system.
LawReport classify_laws(const LogicSystem& logic);

// ── Serialization ───────────────────────────────────────────────────────────
// Text form uses aligned columns and T/X/F value letters. JSON form is a
// single document {formula, logic, rows[], designated_ok}.

std::string to_text(const TruthTable& table);
std::string to_json(const TruthTable& table);
std::string to_text(const LawReport& report);
std::string to_json(const LawReport& report);

std::string format_valuation(const Valuation& v);

}  // namespace zetalogic

#endif  // ZETALOGIC_LOGIC_HPP
