#ifndef ZETALOGIC_ERRORS_HPP
#define ZETALOGIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetalogic {

/// Positioned syntax error. `offset` is the byte offset into the input at
/// which the parse failed; `expected` lists the token spellings that would
/// have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset,
               std::vector<std::string> expected)
        : std::runtime_error(std::move(message)),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Well-formed input that violates a semantic rule: unknown logic or
/// predicate names, missing atom assignments, atom-count guards.
class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A request outside an operation's mathematical domain (gamma poles,
/// integral checks at s <= 1, line classification off the line re = 1).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zetalogic

#endif  // ZETALOGIC_ERRORS_HPP
