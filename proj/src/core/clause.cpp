#include "pikit/clause.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace pikit {

namespace {

std::uint64_t literal_bit(const Literal& l) {
    std::size_t h = std::hash<std::string>{}(l.predicate()) * 2 + (l.positive() ? 1 : 0);
    return std::uint64_t{1} << (h % 64);
}

} // namespace

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
    std::sort(literals_.begin(), literals_.end());
    literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
    if (literals_.empty()) {
        text_ = "[]";
        return;
    }
    for (std::size_t i = 0; i < literals_.size(); ++i) {
        if (i) text_.push_back('|');
        if (!literals_[i].positive()) text_.push_back('~');
        text_ += literals_[i].atom().text();
        mask_ |= literal_bit(literals_[i]);
    }
}

bool Clause::is_ground() const noexcept {
    return std::all_of(literals_.begin(), literals_.end(), [](const Literal& l) { return l.atom().is_ground(); });
}

bool is_fundamental(const Clause& c) {
    std::unordered_set<std::string_view> positive;
    for (const auto& l : c.literals())
        if (l.positive()) positive.insert(l.atom().text());
    for (const auto& l : c.literals())
        if (!l.positive() && positive.contains(l.atom().text())) return false;
    return true;
}

VariableSet variables_of(const Clause& c) {
    VariableSet vs;
    for (const auto& l : c.literals())
        for (const auto& t : l.atom().args()) collect_variables(t, vs);
    return vs;
}

} // namespace pikit
