#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pikit/clause_set.hpp"
#include "pikit/subsumption.hpp"

namespace pikit {

struct Limits {
    std::size_t max_rounds = 100;
    std::size_t max_clauses = 10000;
};

enum class LimitKind { max_rounds, max_clauses };

const char* limit_name(LimitKind kind) noexcept;

/// Raised when saturation hits a round or clause cap before reaching a
/// fixpoint. Carries the set built so far.
class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(LimitKind kind, std::size_t limit, ClauseSet partial);

    LimitKind kind() const noexcept { return kind_; }
    std::size_t limit() const noexcept { return limit_; }
    const ClauseSet& partial() const noexcept { return partial_; }

    /// Position of the offending clause when raised from a batch of
    /// incremental additions.
    std::optional<std::size_t> clause_index;

private:
    LimitKind kind_;
    std::size_t limit_;
    ClauseSet partial_;
};

struct ComplementaryPair {
    Literal left;   // from the first clause
    Literal right;  // from the second clause, opposite sign
    Substitution mgu;
};

/// Every opposite-sign literal pair whose atoms unify, in canonical literal
/// order of the first clause and then the second.
std::vector<ComplementaryPair> complementary_pairs(const AssocClause& first, const AssocClause& second);

enum class ConsensusStatus { ok, blocked, non_fundamental };

struct ConsensusResult {
    AssocClause clause;  // id left 0; origin records the parents
    Substitution mgu;
    Literal resolved_left;
    Literal resolved_right;
};

struct ConsensusOutcome {
    ConsensusStatus status = ConsensusStatus::blocked;
    std::optional<ConsensusResult> result;
};

/// Consensus of two associated clauses on one complementary pair. Blocked
/// when compose(first.assoc, mgu) differs from compose(second.assoc, mgu);
/// non_fundamental when the resolvent is a tautology.
ConsensusOutcome consensus(const AssocClause& first, const AssocClause& second, const ComplementaryPair& pair);

enum class TraceOutcome { added, blocked, non_fundamental, duplicate };

const char* trace_outcome_name(TraceOutcome outcome) noexcept;

struct TraceRecord {
    std::size_t round = 0;
    ClauseId left = 0;
    ClauseId right = 0;
    Substitution mgu;
    TraceOutcome outcome = TraceOutcome::added;
};

/// "ROUND 1: (1, 2) mgu={X->b} -> added"
std::string format_trace_record(const TraceRecord& record);

using TraceSink = std::function<void(const TraceRecord&)>;

struct SaturationOptions {
    Limits limits;
    TraceSink trace;
    EngineCounters* counters = nullptr;
};

/// base together with every consensus of a pair (D1 in base, D2 in
/// new_side), D1 != D2. Each unordered pair is tried once, with the member
/// that comes first in base as the first parent. Members of new_side that
/// are missing from base are appended to it first. Fresh members receive ids
/// above the current maximum.
ClauseSet l_step(const ClauseSet& base, const ClauseSet& new_side, const SaturationOptions& options = {},
                 std::size_t round = 1);

struct ClosureResult {
    ClauseSet set;
    /// Smallest i with L^i(X) = L^(i+1)(X).
    std::size_t fixpoint_round = 0;
    /// Members added by each application of L; the last entry is empty.
    std::vector<std::vector<AssocClause>> added_per_round;
};

/// Consensus closure: iterates L until two consecutive iterates coincide.
/// Throws LimitExceeded if the caps are reached first.
ClosureResult closure(const ClauseSet& x, const SaturationOptions& options = {});

} // namespace pikit
