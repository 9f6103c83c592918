#include "pikit/consensus.hpp"

#include <unordered_set>

#include "consensus_round.hpp"
#include "pikit/unify.hpp"

namespace pikit {

const char* limit_name(LimitKind kind) noexcept {
    return kind == LimitKind::max_rounds ? "max-rounds" : "max-clauses";
}

LimitExceeded::LimitExceeded(LimitKind kind, std::size_t limit, ClauseSet partial)
    : std::runtime_error(std::string("limit exceeded: ") + limit_name(kind) + " (" + std::to_string(limit) + ")"),
      kind_(kind),
      limit_(limit),
      partial_(std::move(partial)) {}

std::vector<ComplementaryPair> complementary_pairs(const AssocClause& first, const AssocClause& second) {
    std::vector<ComplementaryPair> out;
    for (const auto& l : first.clause.literals()) {
        for (const auto& r : second.clause.literals()) {
            if (l.positive() == r.positive() || l.predicate() != r.predicate()) continue;
            if (auto u = unify(l.atom(), r.atom())) out.push_back({l, r, std::move(*u.mgu)});
        }
    }
    return out;
}

ConsensusOutcome consensus(const AssocClause& first, const AssocClause& second, const ComplementaryPair& pair) {
    Substitution assoc = compose(first.assoc, pair.mgu);
    if (!(assoc == compose(second.assoc, pair.mgu))) return {ConsensusStatus::blocked, std::nullopt};

    std::vector<Literal> lits;
    lits.reserve(first.clause.size() + second.clause.size());
    for (const auto& l : first.clause.literals())
        if (!(l == pair.left)) lits.push_back(pair.mgu.apply(l));
    for (const auto& l : second.clause.literals())
        if (!(l == pair.right)) lits.push_back(pair.mgu.apply(l));
    Clause resolvent(std::move(lits));
    if (!is_fundamental(resolvent)) return {ConsensusStatus::non_fundamental, std::nullopt};

    ConsensusResult r{
        AssocClause{0, std::move(resolvent), std::move(assoc), Origin::consensus(first.id, second.id)},
        pair.mgu,
        pair.left,
        pair.right,
    };
    return {ConsensusStatus::ok, std::move(r)};
}

const char* trace_outcome_name(TraceOutcome outcome) noexcept {
    switch (outcome) {
    case TraceOutcome::added: return "added";
    case TraceOutcome::blocked: return "blocked";
    case TraceOutcome::non_fundamental: return "non_fundamental";
    case TraceOutcome::duplicate: return "duplicate";
    }
    return "?";
}

std::string format_trace_record(const TraceRecord& record) {
    return "ROUND " + std::to_string(record.round) + ": (" + std::to_string(record.left) + ", " +
           std::to_string(record.right) + ") mgu={" + record.mgu.to_string() + "} -> " +
           trace_outcome_name(record.outcome);
}

namespace detail {

std::vector<AssocClause> consensus_round(const RoundSpec& spec, const SaturationOptions& options, ClauseId& next_id) {
    const auto& members = spec.universe.members();
    std::vector<AssocClause> fresh;
    std::unordered_set<std::string> fresh_keys;

    auto emit = [&](const AssocClause& a, const AssocClause& b, const Substitution& mgu, TraceOutcome o) {
        if (options.trace) options.trace(TraceRecord{spec.round, a.id, b.id, mgu, o});
    };

    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!spec.focus[i] && !spec.focus[j]) continue;
            const AssocClause& a = members[i];
            const AssocClause& b = members[j];
            if (spec.accept && !spec.accept(a, b)) continue;
            for (const auto& pair : complementary_pairs(a, b)) {
                if (options.counters) ++options.counters->consensus_attempts;
                ConsensusOutcome c = consensus(a, b, pair);
                if (c.status == ConsensusStatus::blocked) {
                    emit(a, b, pair.mgu, TraceOutcome::blocked);
                    continue;
                }
                if (c.status == ConsensusStatus::non_fundamental) {
                    emit(a, b, pair.mgu, TraceOutcome::non_fundamental);
                    continue;
                }
                AssocClause& r = c.result->clause;
                std::string key = r.key();
                if (spec.universe.contains_key(key) || fresh_keys.contains(key) || (spec.known && spec.known(key))) {
                    emit(a, b, pair.mgu, TraceOutcome::duplicate);
                    continue;
                }
                emit(a, b, pair.mgu, TraceOutcome::added);
                r.id = next_id++;
                fresh_keys.insert(std::move(key));
                fresh.push_back(std::move(r));
                if (members.size() + fresh.size() > options.limits.max_clauses) {
                    ClauseSet partial = spec.universe;
                    for (auto& f : fresh) partial.insert(std::move(f));
                    throw LimitExceeded(LimitKind::max_clauses, options.limits.max_clauses, std::move(partial));
                }
            }
        }
    }
    return fresh;
}

} // namespace detail

namespace {

ClauseSet with_ids(const ClauseSet& in, ClauseId& next_id) {
    next_id = std::max(next_id, in.max_id() + 1);
    ClauseSet out;
    for (AssocClause m : in) {
        if (m.id == 0) m.id = next_id++;
        out.insert(std::move(m));
    }
    return out;
}

} // namespace

ClauseSet l_step(const ClauseSet& base, const ClauseSet& new_side, const SaturationOptions& options,
                 std::size_t round) {
    ClauseId next_id = 1;
    ClauseSet universe = with_ids(base, next_id);
    for (const auto& m : new_side) {
        AssocClause copy = m;
        if (copy.id == 0) copy.id = next_id++;
        universe.insert(std::move(copy));
    }
    std::vector<bool> focus(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) focus[i] = new_side.contains(universe[i]);

    auto fresh = detail::consensus_round({universe, focus, {}, {}, round}, options, next_id);
    for (auto& f : fresh) universe.insert(std::move(f));
    return universe;
}

ClosureResult closure(const ClauseSet& x, const SaturationOptions& options) {
    ClauseId next_id = 1;
    ClosureResult out;
    out.set = with_ids(x, next_id);
    if (out.set.size() > options.limits.max_clauses)
        throw LimitExceeded(LimitKind::max_clauses, options.limits.max_clauses, out.set);

    // Semi-naive iteration: a pair of members that were both present in the
    // previous round has already been tried, so each round only pairs the
    // members added by the previous round with everything else.
    std::vector<bool> focus(out.set.size(), true);
    for (std::size_t round = 1;; ++round) {
        if (round > options.limits.max_rounds)
            throw LimitExceeded(LimitKind::max_rounds, options.limits.max_rounds, out.set);
        auto fresh = detail::consensus_round({out.set, focus, {}, {}, round}, options, next_id);
        out.added_per_round.push_back(fresh);
        if (fresh.empty()) {
            out.fixpoint_round = round - 1;
            return out;
        }
        focus.assign(out.set.size(), false);
        for (auto& f : fresh) {
            out.set.insert(std::move(f));
            focus.push_back(true);
        }
    }
}

} // namespace pikit
