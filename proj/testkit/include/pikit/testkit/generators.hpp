#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "pikit/clause.hpp"

namespace pikit::testkit {

/// Shape of random instances. Predicate i has arity 1 + i % max_arity
/// (0 when max_arity is 0); function symbols are unary.
struct GenConfig {
    std::size_t num_predicates = 3;
    std::size_t max_arity = 2;
    std::size_t num_variables = 3;
    std::size_t num_constants = 2;
    std::size_t num_functions = 1;
    std::size_t max_term_depth = 1;
    std::pair<std::size_t, std::size_t> clause_len_range{1, 3};
    std::pair<std::size_t, std::size_t> kb_size_range{1, 6};
    /// When nonzero, literals are drawn from a fixed pool of this many
    /// distinct atoms (capped by what the signature can produce).
    std::size_t atom_pool = 0;
    std::uint64_t seed = 1;
};

/// Seeded source of terms, clauses and KBs. Identical configs produce
/// identical streams. Only fundamental clauses are produced.
class Generator {
public:
    explicit Generator(GenConfig cfg);

    const GenConfig& config() const noexcept { return cfg_; }
    const std::vector<Atom>& pool() const noexcept { return pool_; }

    Term term(std::size_t depth);
    Atom atom();
    Clause clause();
    std::vector<Clause> kb();

    std::mt19937_64& rng() noexcept { return rng_; }

private:
    std::size_t uniform(std::size_t lo, std::size_t hi);

    GenConfig cfg_;
    std::mt19937_64 rng_;
    std::vector<Atom> pool_;
};

std::vector<Clause> gen_kb(const GenConfig& cfg);
Clause gen_clause(const GenConfig& cfg);

/// Symbol names used by the generators.
const std::vector<std::string>& predicate_names();
const std::vector<std::string>& constant_names();
const std::vector<std::string>& function_names();
const std::vector<std::string>& variable_names();

} // namespace pikit::testkit
