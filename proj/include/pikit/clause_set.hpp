#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "pikit/clause.hpp"
#include "pikit/substitution.hpp"

namespace pikit {

using ClauseId = std::uint64_t;

struct Origin {
    enum class Kind { input, consensus };

    Kind kind = Kind::input;
    ClauseId left = 0;
    ClauseId right = 0;

    static Origin input() { return {}; }
    static Origin consensus(ClauseId l, ClauseId r) { return {Kind::consensus, l, r}; }

    /// "input" or "consensus(1,3)".
    std::string to_string() const;

    friend bool operator==(const Origin&, const Origin&) = default;
};

/// A clause together with the substitution it is associated with. Input
/// clauses carry the empty substitution. `id` is a per-KB member number used
/// for provenance and tracing; it does not take part in identity.
struct AssocClause {
    ClauseId id = 0;
    Clause clause;
    Substitution assoc;
    Origin origin;

    static AssocClause input(Clause c, ClauseId id = 0) { return {id, std::move(c), {}, Origin::input()}; }

    /// Identity of the member inside a ClauseSet: canonical clause text plus
    /// association.
    std::string key() const;
};

/// Insertion-ordered collection of AssocClauses without duplicate
/// (clause, assoc) pairs.
class ClauseSet {
public:
    ClauseSet() = default;
    ClauseSet(std::initializer_list<AssocClause> members);

    /// Appends unless an equal (clause, assoc) pair is present. Returns
    /// whether the member was added.
    bool insert(AssocClause member);
    bool contains(const AssocClause& member) const { return keys_.contains(member.key()); }
    bool contains_key(const std::string& key) const { return keys_.contains(key); }

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const AssocClause& operator[](std::size_t i) const { return members_[i]; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<AssocClause>& members() const noexcept { return members_; }

    /// Largest member id, 0 when empty.
    ClauseId max_id() const noexcept;

private:
    std::vector<AssocClause> members_;
    std::unordered_set<std::string> keys_;
};

/// Same (clause, assoc) pairs, ignoring insertion order.
bool clause_set_equal(const ClauseSet& a, const ClauseSet& b);

} // namespace pikit
