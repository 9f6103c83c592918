#pragma once

// Step-by-step incremental update with none of the engine's bookkeeping
// (no pair memo, no tombstones): every round recomputes all consensuses
// between eta and Sigma. Used to cross-check incrpi.

#include <stdexcept>

#include "pikit/compiler.hpp"

namespace pikit::test {

inline ClauseSet reference_incrpi(const CompiledKB& kb, const Clause& c, std::size_t max_rounds = 200) {
    if (!is_fundamental(c)) return kb.pi;
    ClauseId next = std::max(kb.next_id, kb.pi.max_id() + 1);
    AssocClause added = AssocClause::input(c, next++);
    ClauseSet gamma = kb.pi;
    bool fresh = gamma.insert(added);
    ClauseSet eta = residue(gamma).kept;
    if (!fresh || !eta.contains(added)) return kb.pi;

    ClauseSet sigma{added};
    for (std::size_t round = 1; round <= max_rounds; ++round) {
        std::vector<AssocClause> derived;
        for (std::size_t i = 0; i < eta.size(); ++i)
            for (std::size_t j = i + 1; j < eta.size(); ++j) {
                if (!sigma.contains(eta[i]) && !sigma.contains(eta[j])) continue;
                for (const auto& pair : complementary_pairs(eta[i], eta[j])) {
                    auto out = consensus(eta[i], eta[j], pair);
                    if (out.status != ConsensusStatus::ok) continue;
                    AssocClause r = out.result->clause;
                    r.id = next++;
                    derived.push_back(std::move(r));
                }
            }
        for (auto& r : derived)
            if (!eta.contains(r)) sigma.insert(std::move(r));
        ClauseSet extended = eta;
        for (const auto& s : sigma) extended.insert(s);
        ClauseSet next_eta = residue(extended).kept;
        ClauseSet kept_sigma;
        for (const auto& s : sigma)
            if (next_eta.contains(s)) kept_sigma.insert(s);
        sigma = std::move(kept_sigma);
        bool stable = clause_set_equal(next_eta, eta);
        eta = std::move(next_eta);
        if (stable) return eta;
    }
    throw std::runtime_error("reference_incrpi: round cap");
}

} // namespace pikit::test
