#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pikit/compiler.hpp"

namespace pikit {

class StoreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kStoreVersion = 1;

/// Line-oriented KB store:
///
///   PIKB 1
///   digest sha256:<hex>
///   next_id 9
///   stats rounds=2 consensus_attempts=7 subsumption_checks=31
///   pred p/1
///   func f/1
///   clause 4 p(X)|r(Z,b) ; assoc Y->Z ; origin consensus(1,3)
///   end 1
///
/// `end` carries the number of clause lines, so a truncated file is
/// rejected.
std::string serialize_kb(const CompiledKB& kb);
CompiledKB deserialize_kb(std::string_view text);

/// Writes to a sibling temporary file and renames it over `path`.
void save_kb(const CompiledKB& kb, const std::filesystem::path& path);
CompiledKB load_kb(const std::filesystem::path& path);

/// Listing used by `pikit show`: one line per prime implicate with its
/// id, association and origin, followed by the stats. Deterministic.
std::string describe_kb(const CompiledKB& kb);

/// "sha256:<hex>" of the bytes.
std::string content_digest(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);
/// Atomic replace via temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

} // namespace pikit
