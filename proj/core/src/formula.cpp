#include "zetalogic/formula.hpp"

#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "zetalogic/errors.hpp"

namespace zetalogic {

struct Formula::Node {
    Kind kind;
    std::string atom_name;                  // Atom only
    std::shared_ptr<const Node> left;       // unary operand / binary lhs
    std::shared_ptr<const Node> right;      // binary rhs
};

bool is_valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

Formula Formula::atom(std::string_view name) {
    if (!is_valid_atom_name(name)) {
        throw std::invalid_argument("invalid atom name: '" + std::string(name) + "'");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Atom;
    node->atom_name = std::string(name);
    return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Not;
    node->left = std::move(operand.node_);
    return Formula(std::move(node));
}

Formula Formula::assertion(Formula operand) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Assert;
    node->left = std::move(operand.node_);
    return Formula(std::move(node));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::And;
    node->left = std::move(lhs.node_);
    node->right = std::move(rhs.node_);
    return Formula(std::move(node));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Or;
    node->left = std::move(lhs.node_);
    node->right = std::move(rhs.node_);
    return Formula(std::move(node));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Implies;
    node->left = std::move(lhs.node_);
    node->right = std::move(rhs.node_);
    return Formula(std::move(node));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Iff;
    node->left = std::move(lhs.node_);
    node->right = std::move(rhs.node_);
    return Formula(std::move(node));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::atom_name() const {
    assert(kind() == Kind::Atom);
    return node_->atom_name;
}

Formula Formula::operand() const {
    assert(is_unary());
    return Formula(node_->left);
}

Formula Formula::lhs() const {
    assert(is_binary() || is_unary());
    return Formula(node_->left);
}

Formula Formula::rhs() const {
    assert(is_binary());
    return Formula(node_->right);
}

bool Formula::operator==(const Formula& other) const {
    const Node* a = node_.get();
    const Node* b = other.node_.get();
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Kind::Atom:
            return a->atom_name == b->atom_name;
        case Kind::Not:
        case Kind::Assert:
            return lhs() == other.lhs();
        default:
            return lhs() == other.lhs() && rhs() == other.rhs();
    }
}

// ── Parser ──────────────────────────────────────────────────────────────────

namespace {

enum class Tok : unsigned char {
    Ident, Not, Assert, And, Or, Implies, Iff, LParen, RParen, End
};

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;  // Ident only
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) {}

    Token next() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= input_.size()) return {Tok::End, at, {}};
        const char c = input_[pos_];
        switch (c) {
            case '!': case '~': ++pos_; return {Tok::Not, at, {}};
            case '&': ++pos_; return {Tok::And, at, {}};
            case '|': ++pos_; return {Tok::Or, at, {}};
            case '(': ++pos_; return {Tok::LParen, at, {}};
            case ')': ++pos_; return {Tok::RParen, at, {}};
            case '-':
                if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
                    pos_ += 2;
                    return {Tok::Implies, at, {}};
                }
                fail(at);
            case '<':
                if (pos_ + 2 < input_.size() && input_[pos_ + 1] == '-' &&
                    input_[pos_ + 2] == '>') {
                    pos_ += 3;
                    return {Tok::Iff, at, {}};
                }
                fail(at);
            default:
                break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < input_.size() &&
                   (std::isalnum(static_cast<unsigned char>(input_[end])) ||
                    input_[end] == '_')) {
                ++end;
            }
            std::string word(input_.substr(pos_, end - pos_));
            if (word == "T" && end < input_.size() && input_[end] == ':') {
                pos_ = end + 1;
                return {Tok::Assert, at, {}};
            }
            pos_ = end;
            return {Tok::Ident, at, std::move(word)};
        }
        fail(at);
    }

private:
    [[noreturn]] void fail(std::size_t at) const {
        std::ostringstream msg;
        msg << "syntax error at offset " << at << ": unexpected character '"
            << input_[at] << "'";
        throw ParseError(msg.str(), at,
                         {"atom", "'('", "'!'", "'~'", "'T:'", "'&'", "'|'",
                          "'->'", "'<->'", "')'"});
    }

    void skip_ws() {
        while (pos_ < input_.size() &&
               std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view input_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view input) : lexer_(input) { advance(); }

    Formula parse() {
        if (cur_.kind == Tok::End) {
            throw ParseError("syntax error at offset 0: empty input", 0,
                             operand_expectations());
        }
        Formula f = parse_iff();
        if (cur_.kind != Tok::End) {
            throw ParseError(describe("expected end of input or a connective"),
                             cur_.offset,
                             {"'&'", "'|'", "'->'", "'<->'", "end of input"});
        }
        return f;
    }

private:
    static std::vector<std::string> operand_expectations() {
        return {"atom", "'('", "'!'", "'~'", "'T:'"};
    }

    std::string describe(const char* what) const {
        std::ostringstream msg;
        msg << "syntax error at offset " << cur_.offset << ": " << what;
        return msg.str();
    }

    void advance() { cur_ = lexer_.next(); }

    Formula parse_iff() {
        Formula lhs = parse_implies();
        while (cur_.kind == Tok::Iff) {
            advance();
            lhs = Formula::biconditional(std::move(lhs), parse_implies());
        }
        return lhs;
    }

    Formula parse_implies() {
        Formula lhs = parse_or();
        if (cur_.kind == Tok::Implies) {
            advance();
            return Formula::implication(std::move(lhs), parse_implies());
        }
        return lhs;
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        while (cur_.kind == Tok::Or) {
            advance();
            lhs = Formula::disjunction(std::move(lhs), parse_and());
        }
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (cur_.kind == Tok::And) {
            advance();
            lhs = Formula::conjunction(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    Formula parse_unary() {
        if (cur_.kind == Tok::Not) {
            advance();
            return Formula::negation(parse_unary());
        }
        if (cur_.kind == Tok::Assert) {
            advance();
            return Formula::assertion(parse_unary());
        }
        return parse_primary();
    }

    Formula parse_primary() {
        if (cur_.kind == Tok::Ident) {
            Formula f = Formula::atom(cur_.text);
            advance();
            return f;
        }
        if (cur_.kind == Tok::LParen) {
            advance();
            Formula f = parse_iff();
            if (cur_.kind != Tok::RParen) {
                throw ParseError(describe("expected ')'"), cur_.offset, {"')'"});
            }
            advance();
            return f;
        }
        throw ParseError(describe("expected an operand"), cur_.offset,
                         operand_expectations());
    }

    Lexer lexer_;
    Token cur_{Tok::End, 0, {}};
};

// ── Renderer ────────────────────────────────────────────────────────────────

int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Iff: return 1;
        case Formula::Kind::Implies: return 2;
        case Formula::Kind::Or: return 3;
        case Formula::Kind::And: return 4;
        case Formula::Kind::Not:
        case Formula::Kind::Assert: return 5;
        case Formula::Kind::Atom: return 6;
    }
    return 6;
}

const char* op_text(Formula::Kind k, RenderStyle style) {
    const bool uni = style == RenderStyle::Unicode;
    switch (k) {
        case Formula::Kind::Not: return uni ? "¬" : "!";
        case Formula::Kind::Assert: return "T:";
        case Formula::Kind::And: return uni ? " ∧ " : " & ";
        case Formula::Kind::Or: return uni ? " ∨ " : " | ";
        case Formula::Kind::Implies: return uni ? " → " : " -> ";
        case Formula::Kind::Iff: return uni ? " ↔ " : " <-> ";
        case Formula::Kind::Atom: return "";
    }
    return "";
}

void render_rec(const Formula& f, RenderStyle style, int context_prec,
                std::string& out) {
    const Formula::Kind k = f.kind();
    const int prec = precedence(k);
    const bool parens = prec < context_prec;
    if (parens) out += '(';
    switch (k) {
        case Formula::Kind::Atom:
            out += f.atom_name();
            break;
        case Formula::Kind::Not:
        case Formula::Kind::Assert:
            out += op_text(k, style);
            render_rec(f.operand(), style, 5, out);
            break;
        case Formula::Kind::Iff: {
            // Biconditional operands are parenthesised whenever binary.
            const int operand_context = 5;
            render_rec(f.lhs(), style,
                       f.lhs().is_binary() ? operand_context : 0, out);
            out += op_text(k, style);
            render_rec(f.rhs(), style,
                       f.rhs().is_binary() ? operand_context : 0, out);
            break;
        }
        case Formula::Kind::Implies:
            render_rec(f.lhs(), style, prec + 1, out);
            out += op_text(k, style);
            render_rec(f.rhs(), style, prec, out);  // right-associative
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            render_rec(f.lhs(), style, prec, out);  // left-associative
            out += op_text(k, style);
            render_rec(f.rhs(), style, prec + 1, out);
            break;
    }
    if (parens) out += ')';
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            for (const auto& seen : out) {
                if (seen == f.atom_name()) return;
            }
            out.push_back(f.atom_name());
            return;
        }
        case Formula::Kind::Not:
        case Formula::Kind::Assert:
            collect_atoms(f.operand(), out);
            return;
        default:
            collect_atoms(f.lhs(), out);
            collect_atoms(f.rhs(), out);
            return;
    }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string render(const Formula& f, RenderStyle style) {
    std::string out;
    render_rec(f, style, 0, out);
    return out;
}

std::vector<std::string> atoms(const Formula& f) {
    std::vector<std::string> out;
    collect_atoms(f, out);
    return out;
}

}  // namespace zetalogic
