#pragma once

#include <optional>

#include "pikit/substitution.hpp"

namespace pikit {

enum class UnifyFailure { none, clash, occurs_check };

struct UnifyResult {
    std::optional<Substitution> mgu;
    UnifyFailure failure = UnifyFailure::none;

    explicit operator bool() const noexcept { return mgu.has_value(); }
};

/// Robinson unification with occurs check. The returned mgu is idempotent.
/// When two variables meet, the one from the left argument is bound to the
/// one from the right argument.
UnifyResult unify(const Term& left, const Term& right);
UnifyResult unify(const Atom& left, const Atom& right);

/// One-way matching: a substitution over the variables of `pattern` mapping
/// it onto `target`, whose variables are treated as rigid. Extends `bindings`
/// in place; on failure `bindings` may hold partial entries.
bool match(const Term& pattern, const Term& target, Substitution::Map& bindings);

} // namespace pikit
