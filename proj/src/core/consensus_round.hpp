#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pikit/consensus.hpp"

namespace pikit::detail {

struct RoundSpec {
    const ClauseSet& universe;
    /// Only pairs with at least one focused member are tried.
    const std::vector<bool>& focus;
    /// Optional gate on a (first, second) pair; returning false skips it.
    std::function<bool(const AssocClause&, const AssocClause&)> accept;
    /// Keys outside the universe that count as already known (tombstones).
    std::function<bool(const std::string&)> known;
    std::size_t round = 1;
};

/// One application of the consensus operator over unordered pairs i < j of
/// the universe. Returns the fresh members in derivation order, with ids
/// drawn from next_id. Raises LimitExceeded(max_clauses) when the universe
/// plus fresh members outgrows the cap.
std::vector<AssocClause> consensus_round(const RoundSpec& spec, const SaturationOptions& options, ClauseId& next_id);

} // namespace pikit::detail
