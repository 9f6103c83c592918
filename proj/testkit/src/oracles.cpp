#include "pikit/testkit/oracles.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace pikit::testkit {

namespace {

std::size_t find_atom(const std::vector<Atom>& atoms, const Atom& a) {
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == a) return i;
    return atoms.size();
}

void add_atoms(std::vector<Atom>& atoms, const std::vector<Clause>& clauses) {
    for (const auto& c : clauses) {
        for (const auto& l : c.literals()) {
            if (!l.atom().is_ground()) throw OracleError("clause is not ground: " + c.text());
            if (find_atom(atoms, l.atom()) == atoms.size()) atoms.push_back(l.atom());
        }
    }
}

} // namespace

PropositionalOracle::PropositionalOracle(const std::vector<Clause>& kb, const std::vector<Clause>& extra) {
    add_atoms(atoms_, kb);
    add_atoms(atoms_, extra);
    const std::size_t n = atoms_.size();
    if (n > kMaxAtoms) throw OracleError("alphabet too large: " + std::to_string(n) + " atoms");

    models_ = models_of(kb);

    pow3_.assign(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) pow3_[i] = pow3_[i - 1] * 3;
    extendable_.assign(pow3_[n], false);
    // Filling a free digit moves to a larger index, so a descending sweep
    // sees both completions before the partial assignment itself.
    for (std::size_t t = pow3_[n]; t-- > 0;) {
        std::size_t rest = t;
        std::uint32_t assignment = 0;
        std::size_t free_digit = n;
        for (std::size_t i = 0; i < n; ++i, rest /= 3) {
            std::size_t d = rest % 3;
            if (d == 0 && free_digit == n) free_digit = i;
            if (d == 2) assignment |= std::uint32_t{1} << i;
        }
        if (free_digit == n)
            extendable_[t] = models_[assignment];
        else
            extendable_[t] = extendable_[t + pow3_[free_digit]] || extendable_[t + 2 * pow3_[free_digit]];
    }
}

std::vector<bool> PropositionalOracle::models_of(const std::vector<Clause>& clauses) const {
    const std::size_t n = atoms_.size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ms;
    for (const auto& c : clauses) ms.push_back(masks(c));
    std::vector<bool> out(std::size_t{1} << n);
    for (std::uint32_t a = 0; a < out.size(); ++a) {
        bool ok = true;
        for (const auto& [pos, neg] : ms) {
            if ((pos & a) == 0 && (neg & ~a) == 0) {
                ok = false;
                break;
            }
        }
        out[a] = ok;
    }
    return out;
}

std::size_t PropositionalOracle::model_count() const {
    std::size_t k = 0;
    for (bool m : models_) k += m ? 1 : 0;
    return k;
}

std::pair<std::uint32_t, std::uint32_t> PropositionalOracle::masks(const Clause& c) const {
    std::uint32_t pos = 0, neg = 0;
    for (const auto& l : c.literals()) {
        std::size_t i = find_atom(atoms_, l.atom());
        if (i == atoms_.size()) throw OracleError("atom outside the alphabet: " + l.atom().text());
        (l.positive() ? pos : neg) |= std::uint32_t{1} << i;
    }
    return {pos, neg};
}

std::size_t PropositionalOracle::term_index(std::uint32_t pos, std::uint32_t neg) const {
    // The falsifying partial assignment of a clause: positive atoms false
    // (digit 1), negative atoms true (digit 2).
    std::size_t t = 0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (pos >> i & 1) t += pow3_[i];
        if (neg >> i & 1) t += 2 * pow3_[i];
    }
    return t;
}

bool PropositionalOracle::entails(const Clause& c) const {
    auto [pos, neg] = masks(c);
    if (pos & neg) return true;
    return !extendable_[term_index(pos, neg)];
}

std::vector<Clause> PropositionalOracle::prime_implicates() const {
    const std::size_t n = atoms_.size();
    std::vector<Clause> out;
    for (std::size_t t = 0; t < extendable_.size(); ++t) {
        if (extendable_[t]) continue;
        bool prime = true;
        std::size_t rest = t;
        std::vector<Literal> lits;
        for (std::size_t i = 0; i < n && prime; ++i, rest /= 3) {
            std::size_t d = rest % 3;
            if (d == 0) continue;
            if (!extendable_[t - d * pow3_[i]]) prime = false;
            lits.emplace_back(d == 1, atoms_[i]);
        }
        if (prime) out.emplace_back(std::move(lits));
    }
    return out;
}

std::vector<Clause> prop_prime_implicates(const std::vector<Clause>& ground_kb) {
    return PropositionalOracle(ground_kb).prime_implicates();
}

std::vector<Term> universe_terms(const GroundUniverse& u) {
    std::vector<Term> terms;
    std::set<std::string> seen;
    auto add = [&](Term t) {
        if (terms.size() >= u.max_terms) throw OracleError("Herbrand universe too large");
        if (seen.insert(t.to_string()).second) terms.push_back(std::move(t));
    };
    for (const auto& c : u.constants) add(Term::constant(c));
    for (std::size_t level = 0; level < u.depth_bound; ++level) {
        std::vector<Term> previous = terms;
        for (const auto& [f, arity] : u.functions) {
            if (arity == 0) {
                add(Term::constant(f));
                continue;
            }
            std::vector<std::size_t> idx(arity, 0);
            for (;;) {
                std::vector<Term> args;
                for (std::size_t k : idx) args.push_back(previous[k]);
                add(Term::compound(f, std::move(args)));
                std::size_t k = 0;
                while (k < arity && ++idx[k] == previous.size()) idx[k++] = 0;
                if (k == arity) break;
            }
        }
    }
    return terms;
}

namespace {

Term instantiate(const Term& t, const std::map<std::string, Term>& values) {
    if (t.is_variable()) return values.at(t.symbol());
    if (t.is_ground()) return t;
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(instantiate(a, values));
    return Term::compound(t.symbol(), std::move(args));
}

} // namespace

std::vector<Clause> ground_instances(const Clause& c, const GroundUniverse& u, std::size_t max_instances) {
    VariableSet vars = variables_of(c);
    if (vars.empty()) return {c};
    std::vector<Term> terms = universe_terms(u);
    if (terms.empty()) return {};
    std::vector<std::string> names(vars.begin(), vars.end());

    std::vector<Clause> out;
    std::set<std::string> seen;
    std::vector<std::size_t> idx(names.size(), 0);
    for (;;) {
        std::map<std::string, Term> values;
        for (std::size_t k = 0; k < names.size(); ++k) values.emplace(names[k], terms[idx[k]]);
        std::vector<Literal> lits;
        for (const auto& l : c.literals()) {
            std::vector<Term> args;
            for (const auto& a : l.atom().args()) args.push_back(instantiate(a, values));
            lits.emplace_back(l.positive(), Atom(l.predicate(), std::move(args)));
        }
        Clause g(std::move(lits));
        if (seen.insert(g.text()).second) {
            if (out.size() >= max_instances) throw OracleError("too many ground instances");
            out.push_back(std::move(g));
        }
        std::size_t k = 0;
        while (k < names.size() && ++idx[k] == terms.size()) idx[k++] = 0;
        if (k == names.size()) break;
    }
    return out;
}

bool check_implicate_semantically(const std::vector<Clause>& kb, const Clause& c, const GroundUniverse& u) {
    std::vector<Clause> ground_kb;
    for (const auto& k : kb)
        for (auto& g : ground_instances(k, u)) ground_kb.push_back(std::move(g));
    std::vector<Clause> ground_c = ground_instances(c, u);

    std::vector<Atom> atoms;
    add_atoms(atoms, ground_kb);
    add_atoms(atoms, ground_c);
    if (atoms.size() > 16) throw OracleError("grounded problem too large: " + std::to_string(atoms.size()) + " atoms");

    auto to_masks = [&](const std::vector<Clause>& cs) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        for (const auto& g : cs) {
            std::uint32_t pos = 0, neg = 0;
            for (const auto& l : g.literals())
                (l.positive() ? pos : neg) |= std::uint32_t{1} << find_atom(atoms, l.atom());
            out.emplace_back(pos, neg);
        }
        return out;
    };
    auto kb_masks = to_masks(ground_kb);
    auto c_masks = to_masks(ground_c);
    auto sat = [](std::uint32_t a, std::pair<std::uint32_t, std::uint32_t> m) {
        return (m.first & a) != 0 || (m.second & ~a) != 0;
    };

    for (std::uint32_t a = 0; a < (std::uint32_t{1} << atoms.size()); ++a) {
        bool model = true;
        for (const auto& m : kb_masks)
            if (!sat(a, m)) {
                model = false;
                break;
            }
        if (!model) continue;
        bool some = false;
        for (const auto& m : c_masks)
            if (sat(a, m)) {
                some = true;
                break;
            }
        if (!some) return false;
    }
    return true;
}

} // namespace pikit::testkit
