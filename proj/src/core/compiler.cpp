#include "pikit/compiler.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <utility>

#include "consensus_round.hpp"

namespace pikit {

bool CompiledKB::inconsistent() const { return pi.size() == 1 && pi[0].clause.empty(); }

const char* outcome_name(IncrementalOutcome outcome) noexcept {
    switch (outcome) {
    case IncrementalOutcome::absorbed: return "absorbed";
    case IncrementalOutcome::unchanged: return "unchanged";
    case IncrementalOutcome::recompiled: return "recompiled";
    }
    return "?";
}

namespace {

KBStats& operator+=(KBStats& a, const KBStats& b) {
    a.rounds += b.rounds;
    a.consensus_attempts += b.consensus_attempts;
    a.subsumption_checks += b.subsumption_checks;
    return a;
}

KBStats to_stats(const EngineCounters& c, std::uint64_t rounds) {
    return {rounds, c.consensus_attempts, c.subsumption_checks};
}

} // namespace

CompiledKB compile(const std::vector<Clause>& clauses, const CompileOptions& options) {
    ClauseSet input;
    ClauseId id = 1;
    for (const auto& c : clauses) {
        if (!is_fundamental(c)) {
            if (options.warn) options.warn("dropping non-fundamental clause " + c.text());
            continue;
        }
        if (input.insert(AssocClause::input(c, id))) ++id;
    }
    return compile(input, options);
}

CompiledKB compile(const ClauseSet& clauses, const CompileOptions& options) {
    ClauseSet input;
    for (const auto& m : clauses) {
        if (!is_fundamental(m.clause)) {
            if (options.warn) options.warn("dropping non-fundamental clause " + m.clause.text());
            continue;
        }
        input.insert(m);
    }

    EngineCounters counters;
    ClosureResult closed = closure(input, {options.limits, options.trace, &counters});
    ResidueResult res = residue(closed.set, &counters);

    CompiledKB kb;
    for (const auto& m : clauses) kb.signature.declare_clause(m.clause);
    kb.next_id = closed.set.max_id() + 1;
    kb.pi = std::move(res.kept);
    kb.stats = to_stats(counters, closed.added_per_round.size());
    return kb;
}

IncrementalReport incrpi(const CompiledKB& kb, const Clause& clause, const CompileOptions& options) {
    IncrementalReport report;
    report.result = kb;
    report.result.signature.declare_clause(clause);
    if (!is_fundamental(clause)) {
        report.outcome = IncrementalOutcome::unchanged;
        return report;
    }

    EngineCounters counters;
    SaturationOptions sat{options.limits, options.trace, &counters};
    ClauseId next_id = std::max(kb.next_id, kb.pi.max_id() + 1);

    AssocClause added = AssocClause::input(clause, next_id++);
    ClauseSet sigma{added};
    report.sigma_history.push_back(sigma);

    ClauseSet gamma = kb.pi;
    // An identical member already present subsumes the new clause.
    bool fresh = gamma.insert(added);
    ResidueResult first = residue(gamma, &counters);
    report.eta_history.push_back(first.kept);
    if (!fresh || !first.kept.contains(added)) {
        report.outcome = IncrementalOutcome::absorbed;
        report.run_stats = to_stats(counters, 0);
        report.result.stats += report.run_stats;
        return report;
    }

    ClauseSet eta = std::move(first.kept);
    std::unordered_set<std::string> tombstones;
    for (const auto& d : first.deleted) tombstones.insert(d.key());
    std::set<std::pair<ClauseId, ClauseId>> attempted;

    auto accept = [&](const AssocClause& a, const AssocClause& b) { return attempted.emplace(a.id, b.id).second; };
    auto known = [&](const std::string& key) { return tombstones.contains(key); };

    std::size_t round = 1;
    for (;; ++round) {
        if (round > options.limits.max_rounds)
            throw LimitExceeded(LimitKind::max_rounds, options.limits.max_rounds, eta);

        std::vector<bool> focus(eta.size());
        for (std::size_t i = 0; i < eta.size(); ++i) focus[i] = sigma.contains(eta[i]);
        auto derived = detail::consensus_round({eta, focus, accept, known, round}, sat, next_id);
        for (auto& r : derived) sigma.insert(std::move(r));

        ClauseSet extended = eta;
        for (const auto& s : sigma) extended.insert(s);
        ResidueResult res = residue(extended, &counters);
        for (const auto& d : res.deleted) tombstones.insert(d.key());

        ClauseSet surviving;
        for (const auto& s : sigma)
            if (res.kept.contains(s)) surviving.insert(s);
        sigma = std::move(surviving);
        report.sigma_history.push_back(sigma);
        report.eta_history.push_back(res.kept);

        bool stable = clause_set_equal(res.kept, eta);
        eta = std::move(res.kept);
        if (stable) break;
    }

    report.outcome = IncrementalOutcome::recompiled;
    report.run_stats = to_stats(counters, round);
    report.result.pi = std::move(eta);
    report.result.next_id = next_id;
    report.result.stats += report.run_stats;
    return report;
}

BatchReport incrpi_batch(const CompiledKB& kb, const std::vector<Clause>& clauses, const CompileOptions& options) {
    BatchReport out;
    out.result = kb;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        try {
            out.steps.push_back(incrpi(out.result, clauses[i], options));
        } catch (LimitExceeded& e) {
            e.clause_index = i;
            throw;
        }
        out.result = out.steps.back().result;
    }
    return out;
}

Entailment entails(const CompiledKB& kb, const Clause& query) {
    Entailment e;
    if (!is_fundamental(query)) {
        e.entailed = true;
        e.tautology = true;
        return e;
    }
    for (const auto& d : kb.pi) {
        if (auto w = subsumes(d.clause, query)) {
            e.entailed = true;
            e.witness = d;
            e.witness_subst = std::move(*w);
            return e;
        }
    }
    return e;
}

} // namespace pikit
