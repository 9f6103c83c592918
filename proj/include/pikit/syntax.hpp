#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pikit/clause.hpp"
#include "pikit/signature.hpp"
#include "pikit/substitution.hpp"

namespace pikit {

struct ClauseFile {
    std::vector<Clause> clauses;
    std::vector<SourcePos> positions;
};

/// Grammar:
///   file      := (clause | comment)*
///   clause    := literal ("|" literal)* "."
///   literal   := ["~"] lident ["(" term ("," term)* ")"]
///   term      := uident | lident ["(" term ("," term)* ")"]
///   comment   := "#" to end of line
/// Uppercase-initial identifiers (and "_"-initial) are variables. Symbols
/// are declared in `sig`, which must stay arity-consistent.
ClauseFile parse_clause_file(std::string_view text, Signature& sig);
ClauseFile parse_clause_file(std::string_view text);

/// A single clause with an optional terminating period. "[]" denotes the
/// empty clause.
Clause parse_clause(std::string_view text, Signature& sig);
Clause parse_clause(std::string_view text);

/// "X->b, Z->f(a)"; the empty string is the identity.
Substitution parse_substitution(std::string_view text, Signature& sig);

/// Canonical text with a terminating period, e.g. "~p(a)."
std::string print_clause(const Clause& c);

} // namespace pikit
