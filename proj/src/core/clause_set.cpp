#include "pikit/clause_set.hpp"

#include <algorithm>

namespace pikit {

std::string Origin::to_string() const {
    if (kind == Kind::input) return "input";
    return "consensus(" + std::to_string(left) + "," + std::to_string(right) + ")";
}

std::string AssocClause::key() const { return clause.text() + " ; " + assoc.to_string(); }

ClauseSet::ClauseSet(std::initializer_list<AssocClause> members) {
    for (const auto& m : members) insert(m);
}

bool ClauseSet::insert(AssocClause member) {
    if (!keys_.insert(member.key()).second) return false;
    members_.push_back(std::move(member));
    return true;
}

ClauseId ClauseSet::max_id() const noexcept {
    ClauseId m = 0;
    for (const auto& c : members_) m = std::max(m, c.id);
    return m;
}

bool clause_set_equal(const ClauseSet& a, const ClauseSet& b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.begin(), a.end(), [&](const AssocClause& m) { return b.contains(m); });
}

} // namespace pikit
