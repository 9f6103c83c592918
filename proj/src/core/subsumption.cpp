#include "pikit/subsumption.hpp"

#include <algorithm>
#include <numeric>

#include "pikit/unify.hpp"

namespace pikit {

namespace {

bool match_literal(const Literal& pattern, const Literal& target, Substitution::Map& bindings) {
    if (pattern.positive() != target.positive() || pattern.predicate() != target.predicate() ||
        pattern.atom().arity() != target.atom().arity())
        return false;
    auto pa = pattern.atom().args();
    auto ta = target.atom().args();
    for (std::size_t i = 0; i < pa.size(); ++i)
        if (!match(pa[i], ta[i], bindings)) return false;
    return true;
}

struct Search {
    std::span<const Literal> general;
    std::span<const Literal> specific;
    std::vector<std::size_t> order;
    std::vector<std::vector<std::size_t>> candidates;

    bool solve(std::size_t depth, Substitution::Map& bindings) const {
        if (depth == order.size()) return true;
        const Literal& lit = general[order[depth]];
        for (std::size_t c : candidates[order[depth]]) {
            Substitution::Map trial = bindings;
            if (match_literal(lit, specific[c], trial) && solve(depth + 1, trial)) {
                bindings = std::move(trial);
                return true;
            }
        }
        return false;
    }
};

} // namespace

std::optional<Substitution> subsumes(const Clause& general, const Clause& specific) {
    if ((general.mask() & ~specific.mask()) != 0) return std::nullopt;
    // Literal inclusion needs no bindings; report the identity witness.
    if (std::includes(specific.literals().begin(), specific.literals().end(), general.literals().begin(),
                      general.literals().end()))
        return Substitution{};

    Search s{general.literals(), specific.literals(), {}, {}};
    s.candidates.resize(general.size());
    for (std::size_t i = 0; i < general.size(); ++i) {
        const Literal& g = s.general[i];
        for (std::size_t j = 0; j < specific.size(); ++j) {
            const Literal& t = s.specific[j];
            if (g.positive() == t.positive() && g.predicate() == t.predicate() &&
                g.atom().arity() == t.atom().arity())
                s.candidates[i].push_back(j);
        }
        if (s.candidates[i].empty()) return std::nullopt;
    }
    s.order.resize(general.size());
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](std::size_t a, std::size_t b) { return s.candidates[a].size() < s.candidates[b].size(); });

    Substitution::Map bindings;
    if (!s.solve(0, bindings)) return std::nullopt;
    Substitution witness;
    for (auto& [v, t] : bindings) witness.bind(v, t);
    return witness;
}

ResidueResult residue(const ClauseSet& set, EngineCounters* counters) {
    auto check = [&](const Clause& a, const Clause& b) {
        if (counters) ++counters->subsumption_checks;
        return subsumes(a, b).has_value();
    };

    // Greedy pass in insertion order. A candidate is dropped when a kept
    // member subsumes it (this covers mutual subsumption, where the earlier
    // member wins); otherwise it evicts every kept member it subsumes.
    const auto& members = set.members();
    std::vector<bool> alive(members.size(), false);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Clause& c = members[i].clause;
        bool covered = std::any_of(kept.begin(), kept.end(),
                                   [&](std::size_t k) { return check(members[k].clause, c); });
        if (covered) continue;
        std::erase_if(kept, [&](std::size_t k) {
            if (check(c, members[k].clause)) {
                alive[k] = false;
                return true;
            }
            return false;
        });
        kept.push_back(i);
        alive[i] = true;
    }

    ResidueResult out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (alive[i])
            out.kept.insert(members[i]);
        else
            out.deleted.push_back(members[i]);
    }
    return out;
}

} // namespace pikit
