#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pikit/term.hpp"

namespace pikit {

/// Disjunction of literals, stored as a duplicate-free sorted vector so that
/// equality is order-insensitive by construction. The empty clause is
/// permitted and denotes falsity.
class Clause {
public:
    Clause() : text_("[]") {}
    explicit Clause(std::vector<Literal> literals);
    Clause(std::initializer_list<Literal> literals) : Clause(std::vector<Literal>(literals)) {}

    std::span<const Literal> literals() const noexcept { return literals_; }
    std::size_t size() const noexcept { return literals_.size(); }
    bool empty() const noexcept { return literals_.empty(); }
    bool is_ground() const noexcept;

    /// Canonical text without the terminating period, e.g. "p(X)|~q(a)".
    /// The empty clause prints as "[]".
    const std::string& text() const noexcept { return text_; }

    /// Bloom-style mask over (predicate, sign). If c1 subsumes c2 then
    /// c1.mask() is a subset of c2.mask().
    std::uint64_t mask() const noexcept { return mask_; }

    friend bool operator==(const Clause& a, const Clause& b) noexcept { return a.text_ == b.text_; }

private:
    std::vector<Literal> literals_;
    std::string text_;
    std::uint64_t mask_ = 0;
};

/// False iff some atom occurs in the clause with both signs.
bool is_fundamental(const Clause& c);

VariableSet variables_of(const Clause& c);

} // namespace pikit
