// pikit: compile clause files into prime implicates, add clauses
// incrementally, query and inspect compiled KBs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pikit/pikit.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitLimit = 3;

struct LimitFlags {
    std::optional<std::size_t> max_rounds;
    std::optional<std::size_t> max_clauses;
    std::string trace;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-rounds", max_rounds, "Round cap (default 100, or $PIKIT_MAX_ROUNDS)");
        cmd->add_option("--max-clauses", max_clauses, "Clause cap (default 10000)");
        cmd->add_option("--trace", trace, "Write one line per consensus attempt to this file");
    }

    pikit_limits resolve() const {
        pikit_limits l = pikit_default_limits();
        if (max_rounds) {
            l.max_rounds = *max_rounds;
        } else if (const char* env = std::getenv("PIKIT_MAX_ROUNDS"); env && *env) {
            try {
                l.max_rounds = std::stoul(env);
            } catch (const std::exception&) {
                throw CLI::ValidationError("PIKIT_MAX_ROUNDS", std::string("not a number: ") + env);
            }
        }
        if (max_clauses) l.max_clauses = *max_clauses;
        return l;
    }

    const char* trace_path() const { return trace.empty() ? nullptr : trace.c_str(); }
};

int report(pikit_status status) {
    std::cerr << "pikit: " << pikit_last_error() << '\n';
    return status == PIKIT_ERR_LIMIT ? kExitLimit : kExitError;
}

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct KbHandle {
    pikit_kb* kb = nullptr;
    ~KbHandle() { pikit_kb_free(kb); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { pikit_string_free(s); }
};

int cmd_compile(const std::string& in, const std::string& out, const LimitFlags& flags) {
    auto text = slurp(in);
    if (!text) {
        std::cerr << "pikit: cannot read " << in << '\n';
        return kExitError;
    }
    pikit_limits limits = flags.resolve();
    KbHandle kb;
    auto warn = [](const char* msg, void*) { std::cerr << "pikit: warning: " << msg << '\n'; };
    if (auto st = pikit_compile_text(text->c_str(), &limits, flags.trace_path(), warn, nullptr, &kb.kb))
        return report(st);
    if (auto st = pikit_kb_save(kb.kb, out.c_str())) return report(st);
    std::cout << "compiled " << pikit_kb_size(kb.kb) << " prime implicates into " << out << '\n';
    if (pikit_kb_inconsistent(kb.kb)) std::cout << "status: inconsistent\n";
    return 0;
}

int cmd_add(const std::string& kb_path, const std::string& in, const std::string& out, const LimitFlags& flags) {
    auto text = slurp(in);
    if (!text) {
        std::cerr << "pikit: cannot read " << in << '\n';
        return kExitError;
    }
    pikit_limits limits = flags.resolve();
    KbHandle base, updated;
    if (auto st = pikit_kb_load(kb_path.c_str(), &base.kb)) return report(st);
    auto on_outcome = [](size_t, const char* clause, pikit_outcome o, void*) {
        const char* name = o == PIKIT_ABSORBED ? "absorbed" : o == PIKIT_UNCHANGED ? "unchanged" : "recompiled";
        std::cout << clause << ' ' << name << '\n';
    };
    if (auto st = pikit_kb_add_text(base.kb, text->c_str(), &limits, flags.trace_path(), on_outcome, nullptr,
                                    &updated.kb))
        return report(st);
    if (auto st = pikit_kb_save(updated.kb, out.c_str())) return report(st);
    return 0;
}

int cmd_query(const std::string& kb_path, const std::string& clause) {
    KbHandle kb;
    if (auto st = pikit_kb_load(kb_path.c_str(), &kb.kb)) return report(st);
    int entailed = 0;
    OwnedString witness;
    if (pikit_kb_query(kb.kb, clause.c_str(), &entailed, &witness.s) != PIKIT_OK) {
        std::cerr << "pikit: " << pikit_last_error() << '\n';
        return kExitError;
    }
    if (!entailed) {
        std::cout << "NO\n";
        return kExitNo;
    }
    std::cout << "YES " << witness.s << '\n';
    return kExitYes;
}

int cmd_show(const std::string& kb_path) {
    KbHandle kb;
    if (auto st = pikit_kb_load(kb_path.c_str(), &kb.kb)) return report(st);
    OwnedString text;
    if (auto st = pikit_kb_show(kb.kb, &text.s)) return report(st);
    std::cout << text.s;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime implicate compiler for first-order clause sets"};
    app.set_version_flag("--version", pikit_version());
    app.require_subcommand(1);

    std::string in, out, kb_path, clause;
    LimitFlags compile_flags, add_flags;

    auto* compile = app.add_subcommand("compile", "Compile a clause file into a KB");
    compile->add_option("input", in, "Clause file")->required();
    compile->add_option("-o,--output", out, "KB store to write")->required();
    compile_flags.attach(compile);

    auto* add = app.add_subcommand("add", "Add the clauses of a file to a KB incrementally");
    add->add_option("kb", kb_path, "KB store")->required();
    add->add_option("clauses", in, "Clause file")->required();
    add->add_option("-o,--output", out, "KB store to write")->required();
    add_flags.attach(add);

    auto* query = app.add_subcommand("query", "Ask whether a clause is entailed (exit 0 yes, 1 no)");
    query->add_option("kb", kb_path, "KB store")->required();
    query->add_option("clause", clause, "Clause text, e.g. \"~p(a)|s(X).\"")->required();

    auto* show = app.add_subcommand("show", "List prime implicates with associations and stats");
    show->add_option("kb", kb_path, "KB store")->required();

    try {
        app.parse(argc, argv);
        if (*compile) return cmd_compile(in, out, compile_flags);
        if (*add) return cmd_add(kb_path, in, out, add_flags);
        if (*query) return cmd_query(kb_path, clause);
        if (*show) return cmd_show(kb_path);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }
    return kExitError;
}
