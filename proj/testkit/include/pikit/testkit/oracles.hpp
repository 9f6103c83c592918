#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pikit/clause.hpp"

// Brute-force semantic oracles. Nothing here calls into the consensus,
// unification or subsumption code of the engine; only the term and clause
// data types are shared.

namespace pikit::testkit {

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Truth-table view of a set of ground clauses over a fixed atom alphabet.
class PropositionalOracle {
public:
    static constexpr std::size_t kMaxAtoms = 14;

    /// Alphabet = atoms of `kb` followed by any new atoms of `extra`.
    explicit PropositionalOracle(const std::vector<Clause>& kb, const std::vector<Clause>& extra = {});

    std::size_t num_atoms() const noexcept { return atoms_.size(); }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }

    /// Whether the assignment (bit i = truth of atom i) satisfies the KB.
    bool is_model(std::uint32_t assignment) const { return models_[assignment]; }
    std::size_t model_count() const;

    /// Truth-table entailment. Tautologies are entailed. Throws if the
    /// clause mentions an atom outside the alphabet.
    bool entails(const Clause& c) const;

    /// Every fundamental clause over the alphabet that is entailed and none
    /// of whose one-literal-smaller subclauses is entailed.
    std::vector<Clause> prime_implicates() const;

    /// Models of an arbitrary clause list over this alphabet.
    std::vector<bool> models_of(const std::vector<Clause>& clauses) const;

private:
    std::pair<std::uint32_t, std::uint32_t> masks(const Clause& c) const;
    std::size_t term_index(std::uint32_t pos, std::uint32_t neg) const;

    std::vector<Atom> atoms_;
    std::vector<bool> models_;
    // Indexed by partial assignments in base 3 (0 free, 1 false, 2 true):
    // whether some model extends the partial assignment.
    std::vector<bool> extendable_;
    std::vector<std::size_t> pow3_;
};

/// Propositional prime implicates of a ground KB (at most 14 atoms).
std::vector<Clause> prop_prime_implicates(const std::vector<Clause>& ground_kb);

struct GroundUniverse {
    std::vector<std::string> constants{"a"};
    std::vector<std::pair<std::string, std::size_t>> functions;
    std::size_t depth_bound = 1;
    std::size_t max_terms = 4096;
};

/// Herbrand terms up to the depth bound.
std::vector<Term> universe_terms(const GroundUniverse& u);

/// All instances of `c` with its variables replaced by universe terms.
std::vector<Clause> ground_instances(const Clause& c, const GroundUniverse& u, std::size_t max_instances = 100000);

/// True iff every assignment satisfying all ground instances of `kb` also
/// satisfies some ground instance of `c`. Limited to 16 ground atoms. For
/// the universal reading of `c`, call it once per ground instance.
bool check_implicate_semantically(const std::vector<Clause>& kb, const Clause& c, const GroundUniverse& u);

} // namespace pikit::testkit
