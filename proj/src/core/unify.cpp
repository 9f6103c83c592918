#include "pikit/unify.hpp"

#include <utility>
#include <vector>

namespace pikit {

namespace {

struct Unifier {
    Substitution subst;
    std::vector<std::pair<Term, Term>> pending;

    // s := s o {var -> t}; t is already fully instantiated by s.
    UnifyFailure bind(const std::string& var, const Term& t) {
        if (t.contains_variable(var)) return UnifyFailure::occurs_check;
        subst = compose(subst, Substitution{{var, t}});
        return UnifyFailure::none;
    }

    UnifyFailure run() {
        // Pairs are consumed in insertion order so argument lists are solved
        // left to right.
        for (std::size_t next = 0; next < pending.size(); ++next) {
            Term a = subst.apply(pending[next].first);
            Term b = subst.apply(pending[next].second);
            if (a == b) continue;
            UnifyFailure f = UnifyFailure::none;
            if (a.is_variable()) {
                f = bind(a.symbol(), b);
            } else if (b.is_variable()) {
                f = bind(b.symbol(), a);
            } else if (a.symbol() != b.symbol() || a.arity() != b.arity()) {
                f = UnifyFailure::clash;
            } else {
                for (std::size_t i = 0; i < a.arity(); ++i) pending.emplace_back(a.args()[i], b.args()[i]);
            }
            if (f != UnifyFailure::none) return f;
        }
        return UnifyFailure::none;
    }

    UnifyResult result(UnifyFailure f) {
        if (f != UnifyFailure::none) return {std::nullopt, f};
        return {std::move(subst), UnifyFailure::none};
    }
};

} // namespace

UnifyResult unify(const Term& left, const Term& right) {
    Unifier u;
    u.pending.emplace_back(left, right);
    return u.result(u.run());
}

UnifyResult unify(const Atom& left, const Atom& right) {
    if (left.predicate() != right.predicate() || left.arity() != right.arity())
        return {std::nullopt, UnifyFailure::clash};
    Unifier u;
    for (std::size_t i = 0; i < left.arity(); ++i) u.pending.emplace_back(left.args()[i], right.args()[i]);
    return u.result(u.run());
}

bool match(const Term& pattern, const Term& target, Substitution::Map& bindings) {
    if (pattern.is_variable()) {
        auto it = bindings.find(pattern.symbol());
        if (it == bindings.end()) {
            bindings.emplace(pattern.symbol(), target);
            return true;
        }
        return it->second == target;
    }
    if (pattern.is_ground()) return pattern == target;
    if (target.is_variable() || pattern.symbol() != target.symbol() || pattern.arity() != target.arity())
        return false;
    for (std::size_t i = 0; i < pattern.arity(); ++i)
        if (!match(pattern.args()[i], target.args()[i], bindings)) return false;
    return true;
}

} // namespace pikit
