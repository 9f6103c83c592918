#include "pikit/pikit.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "pikit/compiler.hpp"
#include "pikit/store.hpp"
#include "pikit/syntax.hpp"

struct pikit_kb {
    pikit::CompiledKB kb;
};

namespace {

thread_local std::string last_error;

pikit_status fail(pikit_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <class F>
pikit_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return PIKIT_OK;
    } catch (const pikit::ParseError& e) {
        return fail(PIKIT_ERR_PARSE, std::string("parse error: ") + e.what());
    } catch (const pikit::LimitExceeded& e) {
        std::string msg = e.what();
        if (e.clause_index) msg += " while adding clause " + std::to_string(*e.clause_index + 1);
        return fail(PIKIT_ERR_LIMIT, msg);
    } catch (const pikit::StoreError& e) {
        return fail(PIKIT_ERR_STORE, e.what());
    } catch (const pikit::IoError& e) {
        return fail(PIKIT_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PIKIT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PIKIT_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pikit::Limits to_limits(const pikit_limits* limits) {
    pikit::Limits l;
    if (limits) {
        l.max_rounds = limits->max_rounds;
        l.max_clauses = limits->max_clauses;
    }
    return l;
}

// Opens the trace file (if any) and wires a sink that writes one line per
// consensus attempt.
struct TraceFile {
    std::unique_ptr<std::ofstream> stream;

    explicit TraceFile(const char* path) {
        if (!path) return;
        stream = std::make_unique<std::ofstream>(path, std::ios::trunc);
        if (!*stream) throw pikit::IoError(std::string("cannot open trace file ") + path);
    }

    pikit::TraceSink sink() {
        if (!stream) return {};
        return [out = stream.get()](const pikit::TraceRecord& r) { *out << pikit::format_trace_record(r) << '\n'; };
    }
};

pikit_outcome to_c(pikit::IncrementalOutcome o) {
    switch (o) {
    case pikit::IncrementalOutcome::absorbed: return PIKIT_ABSORBED;
    case pikit::IncrementalOutcome::unchanged: return PIKIT_UNCHANGED;
    case pikit::IncrementalOutcome::recompiled: return PIKIT_RECOMPILED;
    }
    return PIKIT_UNCHANGED;
}

} // namespace

extern "C" {

const char* pikit_version(void) { return "1.0.0"; }

const char* pikit_last_error(void) { return last_error.c_str(); }

void pikit_string_free(char* s) { std::free(s); }

pikit_limits pikit_default_limits(void) {
    pikit::Limits l;
    return {l.max_rounds, l.max_clauses};
}

pikit_status pikit_compile_text(const char* text, const pikit_limits* limits, const char* trace_path,
                                pikit_warning_fn warn, void* user, pikit_kb** out) {
    if (!text || !out) return fail(PIKIT_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        pikit::Signature sig;
        pikit::ClauseFile file = pikit::parse_clause_file(text, sig);
        TraceFile trace(trace_path);
        pikit::CompileOptions options{to_limits(limits), trace.sink(), {}};
        if (warn) options.warn = [&](std::string_view m) { warn(std::string(m).c_str(), user); };
        auto kb = std::make_unique<pikit_kb>();
        kb->kb = pikit::compile(file.clauses, options);
        kb->kb.signature.merge(sig);
        kb->kb.source_digest = pikit::content_digest(text);
        *out = kb.release();
    });
}

pikit_status pikit_kb_add_text(const pikit_kb* kb, const char* text, const pikit_limits* limits,
                               const char* trace_path, pikit_outcome_fn on_outcome, void* user, pikit_kb** out) {
    if (!kb || !text || !out) return fail(PIKIT_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        pikit::Signature sig = kb->kb.signature;
        pikit::ClauseFile file = pikit::parse_clause_file(text, sig);
        TraceFile trace(trace_path);
        pikit::CompileOptions options{to_limits(limits), trace.sink(), {}};
        pikit::BatchReport report = pikit::incrpi_batch(kb->kb, file.clauses, options);
        auto result = std::make_unique<pikit_kb>();
        result->kb = std::move(report.result);
        result->kb.signature.merge(sig);
        result->kb.source_digest = pikit::content_digest(kb->kb.source_digest + "\n" + text);
        if (on_outcome) {
            for (std::size_t i = 0; i < report.steps.size(); ++i)
                on_outcome(i, pikit::print_clause(file.clauses[i]).c_str(), to_c(report.steps[i].outcome), user);
        }
        *out = result.release();
    });
}

pikit_status pikit_kb_query(const pikit_kb* kb, const char* clause_text, int* entailed, char** witness) {
    if (!kb || !clause_text || !entailed) return fail(PIKIT_ERR_INVALID_ARGUMENT, "null argument");
    if (witness) *witness = nullptr;
    return guarded([&] {
        pikit::Signature sig = kb->kb.signature;
        pikit::Clause query = pikit::parse_clause(clause_text, sig);
        pikit::Entailment e = pikit::entails(kb->kb, query);
        *entailed = e.entailed ? 1 : 0;
        if (!witness || !e.entailed) return;
        if (e.tautology)
            *witness = dup_string("tautology");
        else
            *witness = dup_string(pikit::print_clause(e.witness->clause) + " ; assoc {" + e.witness->assoc.to_string() +
                                  "} ; subst {" + e.witness_subst.to_string() + "}");
    });
}

pikit_status pikit_kb_show(const pikit_kb* kb, char** text) {
    if (!kb || !text) return fail(PIKIT_ERR_INVALID_ARGUMENT, "null argument");
    *text = nullptr;
    return guarded([&] { *text = dup_string(pikit::describe_kb(kb->kb)); });
}

pikit_status pikit_kb_save(const pikit_kb* kb, const char* path) {
    if (!kb || !path) return fail(PIKIT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { pikit::save_kb(kb->kb, path); });
}

pikit_status pikit_kb_load(const char* path, pikit_kb** out) {
    if (!path || !out) return fail(PIKIT_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto kb = std::make_unique<pikit_kb>();
        kb->kb = pikit::load_kb(path);
        *out = kb.release();
    });
}

size_t pikit_kb_size(const pikit_kb* kb) { return kb ? kb->kb.pi.size() : 0; }

int pikit_kb_inconsistent(const pikit_kb* kb) { return kb && kb->kb.inconsistent() ? 1 : 0; }

pikit_status pikit_kb_clause(const pikit_kb* kb, size_t index, char** text) {
    if (!kb || !text) return fail(PIKIT_ERR_INVALID_ARGUMENT, "null argument");
    *text = nullptr;
    if (index >= kb->kb.pi.size()) return fail(PIKIT_ERR_INVALID_ARGUMENT, "clause index out of range");
    return guarded([&] { *text = dup_string(pikit::print_clause(kb->kb.pi[index].clause)); });
}

void pikit_kb_free(pikit_kb* kb) { delete kb; }

} // extern "C"
