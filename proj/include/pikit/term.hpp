#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pikit {

/// First-order term: a variable or a function application. Constants are
/// applications with no arguments. Terms are immutable and cheap to copy
/// (shared structure).
class Term {
public:
    static Term variable(std::string name);
    static Term constant(std::string name) { return compound(std::move(name), {}); }
    static Term compound(std::string functor, std::vector<Term> args);

    bool is_variable() const noexcept { return node_->variable; }
    bool is_ground() const noexcept { return node_->ground; }
    /// Variable name for variables, functor name otherwise.
    const std::string& symbol() const noexcept { return node_->symbol; }
    std::span<const Term> args() const noexcept { return node_->args; }
    std::size_t arity() const noexcept { return node_->args.size(); }
    std::size_t hash() const noexcept { return node_->hash; }

    /// Nesting depth of function applications; variables and constants are 0.
    std::size_t depth() const noexcept;
    bool contains_variable(std::string_view name) const noexcept;

    void write(std::string& out) const;
    std::string to_string() const;

    friend bool operator==(const Term& a, const Term& b) noexcept;

private:
    struct Node {
        bool variable = false;
        bool ground = true;
        std::size_t hash = 0;
        std::string symbol;
        std::vector<Term> args;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Predicate applied to an argument list. The serialized text is cached and
/// doubles as the identity of the atom.
class Atom {
public:
    Atom(std::string predicate, std::vector<Term> args = {});

    const std::string& predicate() const noexcept { return predicate_; }
    std::span<const Term> args() const noexcept { return args_; }
    std::size_t arity() const noexcept { return args_.size(); }
    const std::string& text() const noexcept { return text_; }
    bool is_ground() const noexcept;

    friend bool operator==(const Atom& a, const Atom& b) noexcept { return a.text_ == b.text_; }

private:
    std::string predicate_;
    std::vector<Term> args_;
    std::string text_;
};

class Literal {
public:
    Literal(bool positive, Atom atom) : positive_(positive), atom_(std::move(atom)) {}

    static Literal pos(Atom atom) { return Literal(true, std::move(atom)); }
    static Literal neg(Atom atom) { return Literal(false, std::move(atom)); }

    bool positive() const noexcept { return positive_; }
    const Atom& atom() const noexcept { return atom_; }
    const std::string& predicate() const noexcept { return atom_.predicate(); }
    Literal negated() const { return Literal(!positive_, atom_); }

    std::string to_string() const;

    friend bool operator==(const Literal& a, const Literal& b) noexcept {
        return a.positive_ == b.positive_ && a.atom_ == b.atom_;
    }
    /// Canonical order: predicate name, then sign (positive first), then
    /// serialized arguments.
    friend bool operator<(const Literal& a, const Literal& b) noexcept;

private:
    bool positive_;
    Atom atom_;
};

using VariableSet = std::set<std::string, std::less<>>;

void collect_variables(const Term& t, VariableSet& out);
VariableSet variables_of(const Term& t);
VariableSet variables_of(const Atom& a);
VariableSet variables_of(const Literal& l);

} // namespace pikit
