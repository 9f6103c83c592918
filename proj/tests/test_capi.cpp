#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "pikit/pikit.h"

namespace {

const char* kThreeClause = "q(Y).\n~r(f(X),b).\np(X)|r(Y,b)|~q(Z).\n";

std::string take(char* s) {
    std::string out = s ? s : "";
    pikit_string_free(s);
    return out;
}

std::vector<std::string> clauses_of(const pikit_kb* kb) {
    std::vector<std::string> out;
    for (size_t i = 0; i < pikit_kb_size(kb); ++i) {
        char* s = nullptr;
        EXPECT_EQ(pikit_kb_clause(kb, i, &s), PIKIT_OK);
        out.push_back(take(s));
    }
    return out;
}

} // namespace

TEST(CApi, CompileAddQuery) {
    pikit_kb* kb = nullptr;
    ASSERT_EQ(pikit_compile_text(kThreeClause, nullptr, nullptr, nullptr, nullptr, &kb), PIKIT_OK) << pikit_last_error();
    EXPECT_EQ(pikit_kb_size(kb), 4u);

    std::vector<std::pair<std::string, pikit_outcome>> outcomes;
    auto record = [](size_t, const char* clause, pikit_outcome o, void* user) {
        static_cast<std::vector<std::pair<std::string, pikit_outcome>>*>(user)->emplace_back(clause, o);
    };
    pikit_kb* updated = nullptr;
    ASSERT_EQ(pikit_kb_add_text(kb, "~p(a)|~q(Z).\nq(a).\n", nullptr, nullptr, record, &outcomes, &updated), PIKIT_OK);
    ASSERT_EQ(outcomes.size(), 2u);
    EXPECT_EQ(outcomes[0].first, "~p(a)|~q(Z).");
    EXPECT_EQ(outcomes[0].second, PIKIT_RECOMPILED);
    EXPECT_EQ(outcomes[1].second, PIKIT_ABSORBED);
    EXPECT_EQ(pikit_kb_size(updated), 5u);
    EXPECT_EQ(pikit_kb_size(kb), 4u);

    int yes = -1;
    char* witness = nullptr;
    ASSERT_EQ(pikit_kb_query(updated, "~p(a)|s(X).", &yes, &witness), PIKIT_OK);
    EXPECT_EQ(yes, 1);
    EXPECT_EQ(take(witness).rfind("~p(a).", 0), 0u);
    ASSERT_EQ(pikit_kb_query(kb, "~p(a)", &yes, &witness), PIKIT_OK);
    EXPECT_EQ(yes, 0);
    EXPECT_EQ(witness, nullptr);

    pikit_kb_free(updated);
    pikit_kb_free(kb);
}

TEST(CApi, SaveLoadShow) {
    auto path = (std::filesystem::temp_directory_path() / "pikit_capi_test.pikb").string();
    pikit_kb* kb = nullptr;
    ASSERT_EQ(pikit_compile_text(kThreeClause, nullptr, nullptr, nullptr, nullptr, &kb), PIKIT_OK);
    ASSERT_EQ(pikit_kb_save(kb, path.c_str()), PIKIT_OK);
    pikit_kb* back = nullptr;
    ASSERT_EQ(pikit_kb_load(path.c_str(), &back), PIKIT_OK);
    EXPECT_EQ(clauses_of(back), clauses_of(kb));
    char* a = nullptr;
    char* b = nullptr;
    ASSERT_EQ(pikit_kb_show(kb, &a), PIKIT_OK);
    ASSERT_EQ(pikit_kb_show(back, &b), PIKIT_OK);
    EXPECT_EQ(take(a), take(b));
    pikit_kb_free(kb);
    pikit_kb_free(back);
    std::filesystem::remove(path);
}

TEST(CApi, ErrorsMapToStatuses) {
    pikit_kb* kb = nullptr;
    EXPECT_EQ(pikit_compile_text("p(a).\np(a,b).", nullptr, nullptr, nullptr, nullptr, &kb), PIKIT_ERR_PARSE);
    EXPECT_EQ(kb, nullptr);
    EXPECT_NE(std::string(pikit_last_error()).find("2:"), std::string::npos) << pikit_last_error();

    EXPECT_EQ(pikit_compile_text(nullptr, nullptr, nullptr, nullptr, nullptr, &kb), PIKIT_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(pikit_kb_load("/nonexistent/kb.pikb", &kb), PIKIT_ERR_IO);

    pikit_limits tight = pikit_default_limits();
    EXPECT_EQ(tight.max_rounds, 100u);
    EXPECT_EQ(tight.max_clauses, 10000u);
    tight.max_clauses = 3;
    EXPECT_EQ(pikit_compile_text("p(a). ~p(X)|p(f(X)). ~p(Y)|q(Y).", &tight, nullptr, nullptr, nullptr, &kb),
              PIKIT_ERR_LIMIT);
    EXPECT_NE(std::string(pikit_last_error()).find("max-clauses"), std::string::npos);

    ASSERT_EQ(pikit_compile_text(kThreeClause, nullptr, nullptr, nullptr, nullptr, &kb), PIKIT_OK);
    int yes = 0;
    // Arity conflict with the KB's signature.
    EXPECT_EQ(pikit_kb_query(kb, "q(a,b)", &yes, nullptr), PIKIT_ERR_PARSE);
    char* s = nullptr;
    EXPECT_EQ(pikit_kb_clause(kb, 99, &s), PIKIT_ERR_INVALID_ARGUMENT);
    pikit_kb_free(kb);
}

TEST(CApi, TraceAndWarnings) {
    auto trace = (std::filesystem::temp_directory_path() / "pikit_capi_trace.txt").string();
    std::vector<std::string> warnings;
    auto warn = [](const char* m, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(m); };
    pikit_kb* kb = nullptr;
    ASSERT_EQ(pikit_compile_text("p(X)|~p(X).\nq(Y).\n~q(Z)|r(Z).\n", nullptr, trace.c_str(), warn, &warnings, &kb),
              PIKIT_OK);
    EXPECT_EQ(warnings.size(), 1u);
    std::ifstream in(trace);
    std::string line;
    ASSERT_TRUE(std::getline(in, line));
    EXPECT_EQ(line, "ROUND 1: (1, 2) mgu={Y->Z} -> added");
    pikit_kb_free(kb);
    std::filesystem::remove(trace);
}
