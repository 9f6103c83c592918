#include "pikit/store.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "pikit/syntax.hpp"

namespace pikit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_number(std::string_view s, std::size_t line) {
    std::uint64_t v = 0;
    s = trim(s);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw StoreError("line " + std::to_string(line) + ": expected a number, found '" + std::string(s) + "'");
    return v;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
    throw StoreError("malformed store, line " + std::to_string(line) + ": " + what);
}

// "name/arity"
std::pair<std::string, std::size_t> parse_symbol(std::string_view s, std::size_t line) {
    s = trim(s);
    auto slash = s.rfind('/');
    if (slash == std::string_view::npos || slash == 0) malformed(line, "expected name/arity");
    return {std::string(s.substr(0, slash)), parse_number(s.substr(slash + 1), line)};
}

Origin parse_origin(std::string_view s, std::size_t line) {
    s = trim(s);
    if (s == "input") return Origin::input();
    constexpr std::string_view prefix = "consensus(";
    if (!s.starts_with(prefix) || !s.ends_with(")")) malformed(line, "bad origin '" + std::string(s) + "'");
    s = s.substr(prefix.size(), s.size() - prefix.size() - 1);
    auto comma = s.find(',');
    if (comma == std::string_view::npos) malformed(line, "bad origin");
    return Origin::consensus(parse_number(s.substr(0, comma), line), parse_number(s.substr(comma + 1), line));
}

} // namespace

std::string serialize_kb(const CompiledKB& kb) {
    std::ostringstream out;
    out << "PIKB " << kStoreVersion << '\n';
    out << "digest " << (kb.source_digest.empty() ? "-" : kb.source_digest) << '\n';
    out << "next_id " << kb.next_id << '\n';
    out << "stats rounds=" << kb.stats.rounds << " consensus_attempts=" << kb.stats.consensus_attempts
        << " subsumption_checks=" << kb.stats.subsumption_checks << '\n';
    for (const auto& [name, arity] : kb.signature.predicates()) out << "pred " << name << '/' << arity << '\n';
    for (const auto& [name, arity] : kb.signature.functions()) out << "func " << name << '/' << arity << '\n';
    for (const auto& m : kb.pi) {
        out << "clause " << m.id << ' ' << m.clause.text() << " ; assoc " << m.assoc.to_string() << " ; origin "
            << m.origin.to_string() << '\n';
    }
    out << "end " << kb.pi.size() << '\n';
    return out.str();
}

CompiledKB deserialize_kb(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start < text.size();) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(trim(text.substr(start, nl - start)));
        start = nl + 1;
    }
    if (lines.empty() || !lines[0].starts_with("PIKB ")) throw StoreError("malformed store: missing PIKB header");
    if (auto v = parse_number(lines[0].substr(5), 1); v != kStoreVersion)
        throw StoreError("unsupported store version " + std::to_string(v) + " (expected " +
                         std::to_string(kStoreVersion) + ")");

    CompiledKB kb;
    Signature declared;
    bool ended = false;
    bool have_next_id = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t ln = i + 1;
        std::string_view line = lines[i];
        if (line.empty()) continue;
        if (ended) malformed(ln, "content after end marker");
        auto sp = line.find(' ');
        std::string_view head = line.substr(0, sp);
        std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp + 1));
        if (head == "digest") {
            kb.source_digest = rest == "-" ? "" : std::string(rest);
        } else if (head == "next_id") {
            kb.next_id = parse_number(rest, ln);
            have_next_id = true;
        } else if (head == "stats") {
            std::istringstream fields{std::string(rest)};
            std::string field;
            while (fields >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) malformed(ln, "bad stats field '" + field + "'");
                std::string key = field.substr(0, eq);
                std::uint64_t v = parse_number(std::string_view(field).substr(eq + 1), ln);
                if (key == "rounds") kb.stats.rounds = v;
                else if (key == "consensus_attempts") kb.stats.consensus_attempts = v;
                else if (key == "subsumption_checks") kb.stats.subsumption_checks = v;
                else malformed(ln, "unknown stats field '" + key + "'");
            }
        } else if (head == "pred" || head == "func") {
            auto [name, arity] = parse_symbol(rest, ln);
            auto kind = head == "pred" ? Signature::Kind::predicate : Signature::Kind::function;
            try {
                declared.declare(kind, name, arity);
            } catch (const ParseError&) {
                throw StoreError("signature conflict, line " + std::to_string(ln) + ": " + name + " declared twice");
            }
        } else if (head == "clause") {
            auto sp2 = rest.find(' ');
            if (sp2 == std::string_view::npos) malformed(ln, "expected clause id and text");
            AssocClause m;
            m.id = parse_number(rest.substr(0, sp2), ln);
            std::string_view body = rest.substr(sp2 + 1);
            auto a = body.find(" ; assoc");
            auto o = body.find(" ; origin ");
            if (a == std::string_view::npos || o == std::string_view::npos || o < a)
                malformed(ln, "expected '<clause> ; assoc <bindings> ; origin <origin>'");
            Signature used;
            try {
                m.clause = parse_clause(body.substr(0, a), used);
                m.assoc = parse_substitution(trim(body.substr(a + 8, o - a - 8)), used);
            } catch (const ParseError& e) {
                malformed(ln, e.what());
            }
            m.origin = parse_origin(body.substr(o + 10), ln);
            try {
                Signature merged = declared;
                merged.merge(used);
                if (!(merged == declared)) throw ParseError({}, "undeclared symbol");
            } catch (const ParseError&) {
                throw StoreError("signature conflict, line " + std::to_string(ln) +
                                 ": clause uses symbols not in the signature table");
            }
            if (!kb.pi.insert(std::move(m))) malformed(ln, "duplicate clause entry");
        } else if (head == "end") {
            if (parse_number(rest, ln) != kb.pi.size()) malformed(ln, "clause count does not match end marker");
            ended = true;
        } else {
            malformed(ln, "unknown record '" + std::string(head) + "'");
        }
    }
    if (!ended) throw StoreError("malformed store: missing end marker (truncated file?)");
    kb.signature = std::move(declared);
    if (!have_next_id) kb.next_id = kb.pi.max_id() + 1;
    return kb;
}

std::string describe_kb(const CompiledKB& kb) {
    std::ostringstream out;
    out << "prime implicates: " << kb.pi.size() << '\n';
    for (const auto& m : kb.pi) {
        out << "  [" << m.id << "] " << print_clause(m.clause) << "  assoc {" << m.assoc.to_string() << "}  origin "
            << m.origin.to_string() << '\n';
    }
    if (kb.inconsistent()) out << "status: inconsistent\n";
    out << "stats: rounds=" << kb.stats.rounds << " consensus_attempts=" << kb.stats.consensus_attempts
        << " subsumption_checks=" << kb.stats.subsumption_checks << '\n';
    out << "digest: " << (kb.source_digest.empty() ? "-" : kb.source_digest) << '\n';
    return out.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out.flush()) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

void save_kb(const CompiledKB& kb, const std::filesystem::path& path) { write_file_atomic(path, serialize_kb(kb)); }

CompiledKB load_kb(const std::filesystem::path& path) { return deserialize_kb(read_file(path)); }

std::string content_digest(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out = "sha256:";
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

} // namespace pikit
