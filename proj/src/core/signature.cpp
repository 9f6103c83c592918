#include "pikit/signature.hpp"

namespace pikit {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_(pos) {}

void Signature::declare(Kind kind, const std::string& name, std::size_t arity, SourcePos pos) {
    auto& table = kind == Kind::predicate ? predicates_ : functions_;
    auto [it, inserted] = table.emplace(name, arity);
    if (!inserted && it->second != arity) {
        throw ParseError(pos, std::string("arity mismatch: ") + (kind == Kind::predicate ? "predicate " : "function ") +
                                  name + " used with arity " + std::to_string(arity) + " and " +
                                  std::to_string(it->second));
    }
}

namespace {

void declare_term(Signature& sig, const Term& t) {
    if (t.is_variable()) return;
    sig.declare(Signature::Kind::function, t.symbol(), t.arity());
    for (const auto& a : t.args()) declare_term(sig, a);
}

} // namespace

void Signature::declare_clause(const Clause& c) {
    for (const auto& l : c.literals()) {
        declare(Kind::predicate, l.predicate(), l.atom().arity());
        for (const auto& t : l.atom().args()) declare_term(*this, t);
    }
}

void Signature::merge(const Signature& other) {
    for (const auto& [n, a] : other.predicates_) declare(Kind::predicate, n, a);
    for (const auto& [n, a] : other.functions_) declare(Kind::function, n, a);
}

} // namespace pikit
