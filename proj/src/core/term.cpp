#include "pikit/term.hpp"

#include <functional>

namespace pikit {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void write_args(std::string& out, std::span<const Term> args) {
    if (args.empty()) return;
    out.push_back('(');
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out.push_back(',');
        args[i].write(out);
    }
    out.push_back(')');
}

} // namespace

Term Term::variable(std::string name) {
    auto node = std::make_shared<Node>();
    node->variable = true;
    node->ground = false;
    node->hash = mix(std::hash<std::string>{}(name), 1);
    node->symbol = std::move(name);
    return Term(std::move(node));
}

Term Term::compound(std::string functor, std::vector<Term> args) {
    auto node = std::make_shared<Node>();
    std::size_t h = mix(std::hash<std::string>{}(functor), 2 + args.size());
    bool ground = true;
    for (const auto& a : args) {
        h = mix(h, a.hash());
        ground = ground && a.is_ground();
    }
    node->ground = ground;
    node->hash = h;
    node->symbol = std::move(functor);
    node->args = std::move(args);
    return Term(std::move(node));
}

std::size_t Term::depth() const noexcept {
    std::size_t d = 0;
    for (const auto& a : args()) d = std::max(d, a.depth() + 1);
    return d;
}

bool Term::contains_variable(std::string_view name) const noexcept {
    if (is_variable()) return symbol() == name;
    if (is_ground()) return false;
    for (const auto& a : args())
        if (a.contains_variable(name)) return true;
    return false;
}

void Term::write(std::string& out) const {
    out += symbol();
    write_args(out, args());
}

std::string Term::to_string() const {
    std::string s;
    write(s);
    return s;
}

bool operator==(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.is_variable() != b.is_variable() || a.symbol() != b.symbol() ||
        a.arity() != b.arity())
        return false;
    auto aa = a.args();
    auto ba = b.args();
    for (std::size_t i = 0; i < aa.size(); ++i)
        if (!(aa[i] == ba[i])) return false;
    return true;
}

Atom::Atom(std::string predicate, std::vector<Term> args) : predicate_(std::move(predicate)), args_(std::move(args)) {
    text_ = predicate_;
    write_args(text_, args_);
}

bool Atom::is_ground() const noexcept {
    for (const auto& a : args_)
        if (!a.is_ground()) return false;
    return true;
}

std::string Literal::to_string() const { return positive_ ? atom_.text() : "~" + atom_.text(); }

bool operator<(const Literal& a, const Literal& b) noexcept {
    if (int c = a.predicate().compare(b.predicate()); c != 0) return c < 0;
    if (a.positive() != b.positive()) return a.positive();
    // Same predicate prefix, so comparing whole texts compares the arguments.
    return a.atom().text() < b.atom().text();
}

void collect_variables(const Term& t, VariableSet& out) {
    if (t.is_variable()) {
        out.insert(t.symbol());
        return;
    }
    if (t.is_ground()) return;
    for (const auto& a : t.args()) collect_variables(a, out);
}

VariableSet variables_of(const Term& t) {
    VariableSet vs;
    collect_variables(t, vs);
    return vs;
}

VariableSet variables_of(const Atom& a) {
    VariableSet vs;
    for (const auto& t : a.args()) collect_variables(t, vs);
    return vs;
}

VariableSet variables_of(const Literal& l) { return variables_of(l.atom()); }

} // namespace pikit
