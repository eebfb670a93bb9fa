#ifndef ZETALOGIC_SQUARE_HPP
#define ZETALOGIC_SQUARE_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace zetalogic {

// ── Finite models ───────────────────────────────────────────────────────────

struct FiniteModel {
    std::vector<std::string> domain;  // unique element names
    std::map<std::string, std::set<std::string>> predicates;

    // Throws SemanticError when extensions mention unknown elements or the
    // domain repeats an element.
    void validate() const;

    // Line format:
    //   domain: e1, e2, ...
    //   pred: e1, e3
    //   empty_pred:
    // Blank lines and '#' comments are skipped. Throws ParseError.
    static FiniteModel parse(std::istream& in);
    static FiniteModel parse_text(std::string_view text);
};

// ── Categorical propositions ────────────────────────────────────────────────
// Evaluated under the modern (Boolean) reading: universal forms are
// vacuously true on an empty subject.

enum class Form : char { A = 'A', E = 'E', I = 'I', O = 'O' };

struct CategoricalProposition {
    Form form;
    std::string subject;
    std::string predicate;
};

bool eval_categorical(const CategoricalProposition& p, const FiniteModel& m);

// ── Square reports ──────────────────────────────────────────────────────────

enum class RelationStatus : unsigned char { Holds, Fails };

struct SquareVerdict {
    std::string subject;
    std::string predicate;
    std::map<Form, bool> truth;
    bool vacuous_subject = false;
    RelationStatus contradictories = RelationStatus::Holds;
    RelationStatus contraries = RelationStatus::Holds;
    RelationStatus subcontraries = RelationStatus::Holds;
    RelationStatus subalternation = RelationStatus::Holds;
    bool paradox_flag = false;  // vacuous subject with A and E both true
};

SquareVerdict square_report(const std::string& subject,
                            const std::string& predicate, const FiniteModel& m);

// ── Case studies ────────────────────────────────────────────────────────────

struct CaseVerdict {
    std::string verdict;        // "trivially-true-by-ECQ" | "third-value" |
                                // "paradox" | "false"
    std::string justification;  // one-line justification code
    std::optional<SquareVerdict> square;  // evidence when square-based
};

struct PnpVerdict {
    std::string id;  // "A1".."O4"
    bool truth;
};

struct PnpResult {
    FiniteModel model;
    std::vector<SquareVerdict> squares;   // the four squares, in order
    std::vector<PnpVerdict> verdicts;     // sixteen A/E/I/O verdicts
    bool a4_e4_paradox = false;
    std::string conclusion;
};

// Fixed built-in model over two witness problems; evaluates the four
// squares P/NP, NP/P, not_P/not_NP, not_NP/not_P.
PnpResult case_study_pnp();

// Reading of the hypothesis in the zeta case study: as a conditional
// ("if there are zeros, all lie on the line") or as a conjunction
// ("there are zeros and all lie on the line").
enum class RhReading { Conditional, Conjunction };

// Rule-based verdict per logic family, keyed on whether the analytic
// continuation is taken as true. logic_name is one of
// {classical, intuitionistic, lp, bochvar}. Throws SemanticError otherwise.
CaseVerdict case_study_rh(bool analytic_continuation_true,
                          std::string_view logic_name,
                          RhReading reading = RhReading::Conditional);

// ── Serialization ───────────────────────────────────────────────────────────

std::string to_text(const SquareVerdict& v);
std::string to_json(const SquareVerdict& v);
std::string to_text(const CaseVerdict& v);
std::string to_json(const CaseVerdict& v);
std::string to_text(const PnpResult& r);
std::string to_json(const PnpResult& r);

}  // namespace zetalogic

#endif  // ZETALOGIC_SQUARE_HPP
