#include <gtest/gtest.h>

#include <map>

#include "pikit/testkit/generators.hpp"
#include "pikit/unify.hpp"
#include "test_util.hpp"

using namespace pikit;
using namespace pikit::test;

TEST(Apply, ReplacesBoundVariables) {
    EXPECT_EQ(S("X->b, Y->f(a)").apply(A("p(X,f(a))")).text(), "p(b,f(a))");
    EXPECT_EQ(Substitution{}.apply(T("g(X,Y)")), T("g(X,Y)"));
    EXPECT_EQ(S("X->g(a)").apply(C("~r(X,f(a))|~p(Y)")).text(), "~p(Y)|~r(g(a),f(a))");
}

TEST(Apply, IsSimultaneous) {
    // X->Y and Y->a applied at once: X becomes Y, not a.
    Substitution s;
    s.bind("X", T("Y"));
    s.bind("Y", T("a"));
    EXPECT_EQ(s.apply(A("p(X,Y)")).text(), "p(Y,a)");
}

TEST(Substitution, DropsIdentityBindings) {
    Substitution s;
    s.bind("X", T("X"));
    EXPECT_TRUE(s.empty());
}

TEST(Compose, Examples) {
    EXPECT_EQ(compose({}, S("X->b")), S("X->b"));
    EXPECT_EQ(compose(S("X->b, Z->f(a)"), S("X->b")), S("X->b, Z->f(a)"));
    EXPECT_EQ(compose(S("X->b"), {}), S("X->b"));
    EXPECT_EQ(compose(S("X->Y"), S("Y->X")), S("Y->X"));
}

TEST(SubstEqual, WholeMapComparison) {
    EXPECT_FALSE(subst_equal(S("X->b"), S("X->b, Z->f(a)")));
    EXPECT_TRUE(subst_equal({}, {}));
    Substitution lhs = S("Y->Z, X->a");
    Substitution rhs = compose(S("Y->Z"), S("X->a"));
    EXPECT_TRUE(subst_equal(lhs, rhs));
    for (const char* t : {"X", "Y", "Z"}) EXPECT_EQ(lhs.apply(T(t)), rhs.apply(T(t)));
}

TEST(Unify, Examples) {
    auto r = unify(A("p(X,f(a))"), A("p(b,Y)"));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r.mgu, S("X->b, Y->f(a)"));

    r = unify(A("p(a)"), A("p(a)"));
    ASSERT_TRUE(r);
    EXPECT_TRUE(r.mgu->empty());

    r = unify(A("p(X)"), A("p(f(X))"));
    EXPECT_FALSE(r);
    EXPECT_EQ(r.failure, UnifyFailure::occurs_check);
}

TEST(Unify, Clashes) {
    EXPECT_EQ(unify(A("p(a)"), A("p(b)")).failure, UnifyFailure::clash);
    EXPECT_EQ(unify(A("p(a)"), A("q(a)")).failure, UnifyFailure::clash);
    EXPECT_EQ(unify(T("f(X)"), T("g(X)")).failure, UnifyFailure::clash);
    EXPECT_EQ(unify(T("f(X,Y)"), T("f(X)")).failure, UnifyFailure::clash);
}

TEST(Unify, VariablePairBindsLeftToRight) {
    auto r = unify(A("q(Y)"), A("q(Z)"));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r.mgu, S("Y->Z"));
}

TEST(Unify, ChainedBindingsStayIdempotent) {
    auto r = unify(A("p(X,Y,Z)"), A("p(Y,Z,f(a))"));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r.mgu, S("X->f(a), Y->f(a), Z->f(a)"));
}

TEST(VariablesOf, Examples) {
    EXPECT_EQ(variables_of(A("p(X,f(a))")), (VariableSet{"X"}));
    EXPECT_TRUE(variables_of(A("p(a)")).empty());
    EXPECT_EQ(variables_of(C("p(X)|~q(Z)")), (VariableSet{"X", "Z"}));
}

TEST(Literal, NegationIsInvolutive) {
    Literal l = C("~p(X)").literals()[0];
    EXPECT_EQ(l.negated().negated(), l);
    EXPECT_NE(l.negated(), l);
}

// --- properties over random terms ---

namespace {

constexpr int kCases = 300;

testkit::GenConfig term_config(std::uint64_t seed) {
    testkit::GenConfig cfg;
    cfg.num_predicates = 1;
    cfg.max_arity = 3;
    cfg.num_variables = 3;
    cfg.num_constants = 2;
    cfg.num_functions = 2;
    cfg.max_term_depth = 2;
    cfg.seed = seed;
    return cfg;
}

// Independent one-way matcher used to check generality; `target` is ground.
bool test_match(const Term& pattern, const Term& target, std::map<std::string, Term>& b) {
    if (pattern.is_variable()) {
        auto [it, fresh] = b.emplace(pattern.symbol(), target);
        return fresh || it->second == target;
    }
    if (target.is_variable() || pattern.symbol() != target.symbol() || pattern.arity() != target.arity()) return false;
    for (std::size_t i = 0; i < pattern.arity(); ++i)
        if (!test_match(pattern.args()[i], target.args()[i], b)) return false;
    return true;
}

Term tuple_of(const VariableSet& vars, const Substitution& s) {
    std::vector<Term> args;
    for (const auto& v : vars) args.push_back(s.apply(Term::variable(v)));
    return Term::compound("tuple", std::move(args));
}

} // namespace

TEST(UnifyProperty, MguIsCorrectAndIdempotent) {
    int unified = 0;
    for (int seed = 1; seed <= kCases; ++seed) {
        testkit::Generator g(term_config(seed));
        Term a = g.term(2), b = g.term(2);
        auto r = unify(a, b);
        if (!r) continue;
        ++unified;
        const Substitution& m = *r.mgu;
        EXPECT_EQ(m.apply(a), m.apply(b)) << a.to_string() << " vs " << b.to_string();
        EXPECT_EQ(compose(m, m), m) << m.to_string();
        EXPECT_EQ(m.apply(m.apply(a)), m.apply(a));
    }
    EXPECT_GT(unified, kCases / 10);
}

TEST(UnifyProperty, FailureMeansNoGroundUnifier) {
    // Over a small ground universe, a failed unification admits no ground
    // unifier either.
    std::vector<Term> universe{T("a"), T("b"), T("f(a)"), T("f(b)"), T("g(a)")};
    for (int seed = 1; seed <= kCases; ++seed) {
        testkit::GenConfig cfg = term_config(seed);
        cfg.max_term_depth = 1;
        testkit::Generator g(cfg);
        Term a = g.term(1), b = g.term(1);
        if (unify(a, b)) continue;
        VariableSet vars = variables_of(a);
        for (const auto& v : variables_of(b)) vars.insert(v);
        std::vector<std::string> names(vars.begin(), vars.end());
        std::vector<std::size_t> idx(names.size(), 0);
        for (;;) {
            Substitution u;
            for (std::size_t k = 0; k < names.size(); ++k) u.bind(names[k], universe[idx[k]]);
            ASSERT_NE(u.apply(a), u.apply(b)) << a.to_string() << " / " << b.to_string();
            std::size_t k = 0;
            while (k < names.size() && ++idx[k] == universe.size()) idx[k++] = 0;
            if (k == names.size()) break;
        }
    }
}

TEST(UnifyProperty, MguIsMostGeneral) {
    // Every ground unifier found by enumeration factors through the mgu.
    std::vector<Term> universe{T("a"), T("b"), T("f(a)"), T("f(b)")};
    int checked = 0;
    for (int seed = 1; seed <= kCases; ++seed) {
        testkit::GenConfig cfg = term_config(seed);
        cfg.max_term_depth = 1;
        testkit::Generator g(cfg);
        Term a = g.term(1), b = g.term(1);
        auto r = unify(a, b);
        if (!r) continue;
        VariableSet vars = variables_of(a);
        for (const auto& v : variables_of(b)) vars.insert(v);
        std::vector<std::string> names(vars.begin(), vars.end());
        Term general = tuple_of(vars, *r.mgu);
        std::vector<std::size_t> idx(names.size(), 0);
        for (;;) {
            Substitution u;
            for (std::size_t k = 0; k < names.size(); ++k) u.bind(names[k], universe[idx[k]]);
            if (u.apply(a) == u.apply(b)) {
                std::map<std::string, Term> rest;
                EXPECT_TRUE(test_match(general, tuple_of(vars, u), rest))
                    << "mgu " << r.mgu->to_string() << " does not generalize " << u.to_string();
                ++checked;
            }
            std::size_t k = 0;
            while (k < names.size() && ++idx[k] == universe.size()) idx[k++] = 0;
            if (k == names.size()) break;
        }
    }
    EXPECT_GT(checked, 200);
}

namespace {

Substitution random_subst(testkit::Generator& g) {
    Substitution s;
    for (const auto& v : testkit::variable_names()) {
        if (v == "U") break;
        if (g.rng()() % 2) s.bind(v, g.term(1));
    }
    return s;
}

} // namespace

TEST(ComposeProperty, CoherentWithApply) {
    for (int seed = 1; seed <= kCases; ++seed) {
        testkit::Generator g(term_config(seed));
        Substitution s1 = random_subst(g), s2 = random_subst(g);
        Term t = g.term(2);
        EXPECT_EQ(compose(s1, s2).apply(t), s2.apply(s1.apply(t)))
            << s1.to_string() << " ; " << s2.to_string() << " on " << t.to_string();
        Substitution both = compose(s1, s2);
        for (const auto& [v, bound] : both.bindings()) EXPECT_NE(bound, Term::variable(v));
    }
}

TEST(ComposeProperty, Associative) {
    for (int seed = 1; seed <= kCases; ++seed) {
        testkit::Generator g(term_config(seed));
        Substitution a = random_subst(g), b = random_subst(g), c = random_subst(g);
        Term t = g.term(2);
        EXPECT_EQ(compose(a, compose(b, c)).apply(t), compose(compose(a, b), c).apply(t));
        EXPECT_EQ(compose(a, compose(b, c)), compose(compose(a, b), c));
    }
}
