#ifndef ZETALOGIC_FORMULA_HPP
#define ZETALOGIC_FORMULA_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace zetalogic {

// ── Formula ─────────────────────────────────────────────────────────────────
// Immutable propositional formula tree over named atoms and six connectives.
// Copies share structure; values are freely shareable across threads.
//
// Surface syntax (ASCII):
//   atoms         identifier: letter followed by letters/digits/underscore
//   !f  ~f        negation
//   T:f           assertion operator
//   f & g         conjunction          (left-associative)
//   f | g         disjunction          (left-associative)
//   f -> g        implication          (right-associative)
//   f <-> g       biconditional        (left-associative)
// Precedence, high to low:  {! ~ T:}  >  &  >  |  >  ->  >  <->

class Formula {
public:
    enum class Kind : unsigned char { Atom, Not, Assert, And, Or, Implies, Iff };

    // Throws std::invalid_argument if `name` is not a valid identifier.
    static Formula atom(std::string_view name);
    static Formula negation(Formula operand);
    static Formula assertion(Formula operand);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula biconditional(Formula lhs, Formula rhs);

    Kind kind() const noexcept;
    bool is_atom() const noexcept { return kind() == Kind::Atom; }
    bool is_unary() const noexcept {
        return kind() == Kind::Not || kind() == Kind::Assert;
    }
    bool is_binary() const noexcept { return !is_atom() && !is_unary(); }

    const std::string& atom_name() const;  // Atom only
    Formula operand() const;               // unary only
    Formula lhs() const;                   // binary only
    Formula rhs() const;                   // binary only

    // Structural equality.
    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class RenderStyle { Ascii, Unicode };

// Parses the surface syntax above. Throws ParseError with byte offset and
// expected-token set; empty input is an error.
Formula parse_formula(std::string_view text);

// Minimal-parenthesis text. parse_formula(render(f)) is structurally equal
// to f. Operands of <-> are parenthesised whenever they are themselves
// binary. Unicode style prints the five classical connectives as
// "¬ ∧ ∨ → ↔"; the assertion operator stays "T:".
std::string render(const Formula& f, RenderStyle style = RenderStyle::Ascii);

// Distinct atom names in first-occurrence (depth-first, left-to-right) order.
std::vector<std::string> atoms(const Formula& f);

// True iff `name` matches the atom lexical rule.
bool is_valid_atom_name(std::string_view name);

}  // namespace zetalogic

#endif  // ZETALOGIC_FORMULA_HPP
