#include "pikit/testkit/generators.hpp"

#include <set>
#include <stdexcept>

namespace pikit::testkit {

const std::vector<std::string>& predicate_names() {
    static const std::vector<std::string> n{"p", "q", "r", "s", "t", "u", "v", "w"};
    return n;
}

const std::vector<std::string>& constant_names() {
    static const std::vector<std::string> n{"a", "b", "c", "d", "e"};
    return n;
}

const std::vector<std::string>& function_names() {
    static const std::vector<std::string> n{"f", "g", "h"};
    return n;
}

const std::vector<std::string>& variable_names() {
    static const std::vector<std::string> n{"X", "Y", "Z", "U", "V", "W"};
    return n;
}

Generator::Generator(GenConfig cfg) : cfg_(cfg), rng_(cfg.seed) {
    if (cfg_.num_predicates == 0 || cfg_.num_predicates > predicate_names().size() ||
        cfg_.num_constants > constant_names().size() || cfg_.num_functions > function_names().size() ||
        cfg_.num_variables > variable_names().size() || cfg_.clause_len_range.first == 0 ||
        cfg_.clause_len_range.first > cfg_.clause_len_range.second ||
        cfg_.kb_size_range.first > cfg_.kb_size_range.second)
        throw std::invalid_argument("GenConfig out of range");
    if (cfg_.num_constants == 0 && cfg_.num_variables == 0 && cfg_.max_arity > 0)
        throw std::invalid_argument("GenConfig: no terms available");

    if (cfg_.atom_pool > 0) {
        std::set<std::string> seen;
        // Bounded number of draws in case the signature cannot produce enough
        // distinct atoms.
        for (std::size_t tries = 0; pool_.size() < cfg_.atom_pool && tries < 200 * cfg_.atom_pool; ++tries) {
            Atom a = atom();
            if (seen.insert(a.text()).second) pool_.push_back(std::move(a));
        }
        cfg_.atom_pool = pool_.size();
    }
}

std::size_t Generator::uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Term Generator::term(std::size_t depth) {
    std::size_t leaves = cfg_.num_variables + cfg_.num_constants;
    bool compound = depth > 0 && cfg_.num_functions > 0 && uniform(0, 3) == 0;
    if (compound || leaves == 0) {
        const std::string& f = function_names()[uniform(0, cfg_.num_functions - 1)];
        return Term::compound(f, {term(depth - 1)});
    }
    std::size_t k = uniform(0, leaves - 1);
    if (k < cfg_.num_variables) return Term::variable(variable_names()[k]);
    return Term::constant(constant_names()[k - cfg_.num_variables]);
}

Atom Generator::atom() {
    if (!pool_.empty() && pool_.size() >= cfg_.atom_pool) return pool_[uniform(0, pool_.size() - 1)];
    std::size_t i = uniform(0, cfg_.num_predicates - 1);
    std::size_t arity = cfg_.max_arity == 0 ? 0 : 1 + i % cfg_.max_arity;
    std::vector<Term> args;
    for (std::size_t k = 0; k < arity; ++k) args.push_back(term(cfg_.max_term_depth));
    return Atom(predicate_names()[i], std::move(args));
}

Clause Generator::clause() {
    for (;;) {
        std::size_t len = uniform(cfg_.clause_len_range.first, cfg_.clause_len_range.second);
        std::vector<Literal> lits;
        for (std::size_t k = 0; k < len; ++k) lits.emplace_back(uniform(0, 1) == 1, atom());
        Clause c(std::move(lits));
        if (is_fundamental(c)) return c;
    }
}

std::vector<Clause> Generator::kb() {
    std::size_t n = uniform(cfg_.kb_size_range.first, cfg_.kb_size_range.second);
    std::vector<Clause> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(clause());
    return out;
}

std::vector<Clause> gen_kb(const GenConfig& cfg) { return Generator(cfg).kb(); }

Clause gen_clause(const GenConfig& cfg) { return Generator(cfg).clause(); }

} // namespace pikit::testkit
