#ifndef MALT_ALGEBRA_FILE_HPP
#define MALT_ALGEBRA_FILE_HPP

#include <iosfwd>
#include <string>

#include "malt/verifier.hpp"

namespace malt {

/// On-disk interchange format for algebras (JSON):
///   {
///     "name": "octonions",
///     "kind": "algebra" | "bracket",
///     "dim": 8,
///     "basis": ["e0", ...],
///     "table": [[i, j, [[k, "p/q"], ...]], ...],   // omitted (i,j): zero product
///     "params": [1, 2, ...]                        // optional, algebra kind only
///   }
/// Coefficients are rational strings, never floats, so files are exact
/// across implementations.
///
/// Parses a file's content. Throws FormatError naming the offending
/// location on malformed input.
VerifyTarget parse_algebra_file(const std::string& text);

/// Reads and parses a file from disk. Throws Error when unreadable.
VerifyTarget load_algebra_file(const std::string& path);

/// Canonical serialization; dump-then-load is the identity on the
/// structure tensor, basis, kind and params.
std::string dump_algebra_file(const VerifyTarget& target);

} // namespace malt

#endif
