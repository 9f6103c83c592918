#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pikit/clause.hpp"
#include "pikit/term.hpp"

namespace pikit {

/// Finite map from variable names to terms. Identity bindings are never
/// stored, so two substitutions are equal iff their binding maps are equal.
class Substitution {
public:
    using Map = std::map<std::string, Term, std::less<>>;

    Substitution() = default;
    Substitution(std::initializer_list<std::pair<std::string, Term>> bindings);
    explicit Substitution(std::vector<std::pair<std::string, Term>> bindings);

    bool empty() const noexcept { return map_.empty(); }
    std::size_t size() const noexcept { return map_.size(); }
    const Map& bindings() const noexcept { return map_; }
    const Term* lookup(std::string_view var) const;

    /// Adds var -> t, dropping it when t is the variable itself. Replaces any
    /// existing binding for var.
    void bind(std::string var, Term t);

    Term apply(const Term& t) const;
    Atom apply(const Atom& a) const;
    Literal apply(const Literal& l) const;
    Clause apply(const Clause& c) const;

    /// "X->b, Z->f(a)" in variable-name order; empty string for the identity.
    std::string to_string() const;

    friend bool operator==(const Substitution& a, const Substitution& b) { return a.map_ == b.map_; }

private:
    Map map_;
};

/// Substitution equivalent to applying `first` and then `second`.
Substitution compose(const Substitution& first, const Substitution& second);

inline bool subst_equal(const Substitution& a, const Substitution& b) { return a == b; }

} // namespace pikit
