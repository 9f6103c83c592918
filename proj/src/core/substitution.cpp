#include "pikit/substitution.hpp"

namespace pikit {

Substitution::Substitution(std::initializer_list<std::pair<std::string, Term>> bindings) {
    for (const auto& [v, t] : bindings) bind(v, t);
}

Substitution::Substitution(std::vector<std::pair<std::string, Term>> bindings) {
    for (auto& [v, t] : bindings) bind(std::move(v), std::move(t));
}

const Term* Substitution::lookup(std::string_view var) const {
    auto it = map_.find(var);
    return it == map_.end() ? nullptr : &it->second;
}

void Substitution::bind(std::string var, Term t) {
    if (t.is_variable() && t.symbol() == var) {
        map_.erase(var);
        return;
    }
    map_.insert_or_assign(std::move(var), std::move(t));
}

Term Substitution::apply(const Term& t) const {
    if (map_.empty() || t.is_ground()) return t;
    if (t.is_variable()) {
        const Term* bound = lookup(t.symbol());
        return bound ? *bound : t;
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(apply(a));
    return Term::compound(t.symbol(), std::move(args));
}

Atom Substitution::apply(const Atom& a) const {
    if (map_.empty() || a.is_ground()) return a;
    std::vector<Term> args;
    args.reserve(a.arity());
    for (const auto& t : a.args()) args.push_back(apply(t));
    return Atom(a.predicate(), std::move(args));
}

Literal Substitution::apply(const Literal& l) const { return Literal(l.positive(), apply(l.atom())); }

Clause Substitution::apply(const Clause& c) const {
    if (map_.empty()) return c;
    std::vector<Literal> lits;
    lits.reserve(c.size());
    for (const auto& l : c.literals()) lits.push_back(apply(l));
    return Clause(std::move(lits));
}

std::string Substitution::to_string() const {
    std::string out;
    for (const auto& [v, t] : map_) {
        if (!out.empty()) out += ", ";
        out += v;
        out += "->";
        t.write(out);
    }
    return out;
}

Substitution compose(const Substitution& first, const Substitution& second) {
    Substitution out;
    for (const auto& [v, t] : first.bindings()) out.bind(v, second.apply(t));
    for (const auto& [v, t] : second.bindings())
        if (!first.lookup(v)) out.bind(v, t);
    return out;
}

} // namespace pikit
