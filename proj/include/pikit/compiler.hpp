#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pikit/clause_set.hpp"
#include "pikit/consensus.hpp"
#include "pikit/signature.hpp"

namespace pikit {

struct KBStats {
    std::uint64_t rounds = 0;
    std::uint64_t consensus_attempts = 0;
    std::uint64_t subsumption_checks = 0;

    friend bool operator==(const KBStats&, const KBStats&) = default;
};

/// A set of prime implicates with provenance. `pi` is subsumption-minimal and
/// every member is fundamental. Stats accumulate over every run that
/// produced or updated the KB.
struct CompiledKB {
    ClauseSet pi;
    KBStats stats;
    std::string source_digest;
    /// Arities of every symbol the KB has seen, including symbols of clauses
    /// that were later subsumed away.
    Signature signature;
    /// Next free member id. Ids are never reused, so provenance links stay
    /// unambiguous after members are deleted.
    ClauseId next_id = 1;

    /// True when the only prime implicate is the empty clause.
    bool inconsistent() const;
};

struct CompileOptions {
    Limits limits;
    TraceSink trace;
    /// Receives one message per dropped non-fundamental input clause.
    std::function<void(std::string_view)> warn;
};

/// Prime implicates as the residue of the consensus closure of the input.
/// Non-fundamental inputs are dropped.
CompiledKB compile(const std::vector<Clause>& clauses, const CompileOptions& options = {});
CompiledKB compile(const ClauseSet& clauses, const CompileOptions& options = {});

enum class IncrementalOutcome { absorbed, unchanged, recompiled };

const char* outcome_name(IncrementalOutcome outcome) noexcept;

struct IncrementalReport {
    CompiledKB result;
    IncrementalOutcome outcome = IncrementalOutcome::unchanged;
    /// Sigma after each round, starting with the singleton of the new clause.
    std::vector<ClauseSet> sigma_history;
    /// eta_1, eta_2, ..., ending with the iterate at which the loop stopped.
    std::vector<ClauseSet> eta_history;
    /// Work done by this call alone.
    KBStats run_stats;
};

/// Adds one clause to a compiled KB without recompiling: consensus is only
/// taken between the current eta and Sigma, never between two members of
/// the original prime implicates.
IncrementalReport incrpi(const CompiledKB& kb, const Clause& clause, const CompileOptions& options = {});

struct BatchReport {
    CompiledKB result;
    std::vector<IncrementalReport> steps;
};

/// Folds incrpi over the clauses in order. A LimitExceeded raised by step k
/// carries clause_index = k.
BatchReport incrpi_batch(const CompiledKB& kb, const std::vector<Clause>& clauses,
                         const CompileOptions& options = {});

struct Entailment {
    bool entailed = false;
    /// Set when the query itself is a tautology; no witness then.
    bool tautology = false;
    std::optional<AssocClause> witness;
    Substitution witness_subst;
};

/// Yes iff some prime implicate subsumes the query.
Entailment entails(const CompiledKB& kb, const Clause& query);

} // namespace pikit
