#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pikit/clause.hpp"
#include "pikit/clause_set.hpp"
#include "pikit/substitution.hpp"

namespace pikit {

/// Work counters shared by the saturation and compilation routines.
struct EngineCounters {
    std::uint64_t consensus_attempts = 0;
    std::uint64_t subsumption_checks = 0;
};

/// Theta-subsumption. Returns a witness sigma with apply(sigma, general)
/// contained in `specific`, or nullopt when none exists. Variables of
/// `specific` are rigid. The search is a complete backtracking search over
/// literal matchings.
std::optional<Substitution> subsumes(const Clause& general, const Clause& specific);

struct ResidueResult {
    ClauseSet kept;
    std::vector<AssocClause> deleted;
};

/// Residue of subsumption. Keeps a subsumption-minimal subset that subsumes
/// every input member. Of two mutually subsuming members the earlier one in
/// insertion order is kept. Associations are ignored for subsumption.
ResidueResult residue(const ClauseSet& set, EngineCounters* counters = nullptr);

} // namespace pikit
