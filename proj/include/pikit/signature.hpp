#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include "pikit/clause.hpp"

namespace pikit {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& message);

    SourcePos pos() const noexcept { return pos_; }

private:
    SourcePos pos_;
};

/// Arity table for predicates and function symbols (constants are arity 0).
/// The two namespaces are independent.
class Signature {
public:
    enum class Kind { predicate, function };

    /// Records name/arity; throws ParseError at `pos` on an arity conflict.
    void declare(Kind kind, const std::string& name, std::size_t arity, SourcePos pos = {});
    void declare_clause(const Clause& c);
    /// Declares every symbol of `other`; throws on conflicts.
    void merge(const Signature& other);

    const std::map<std::string, std::size_t>& predicates() const noexcept { return predicates_; }
    const std::map<std::string, std::size_t>& functions() const noexcept { return functions_; }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::map<std::string, std::size_t> predicates_;
    std::map<std::string, std::size_t> functions_;
};

} // namespace pikit
