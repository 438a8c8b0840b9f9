#ifndef MALT_REPORT_HPP
#define MALT_REPORT_HPP

#include <string>

#include "malt/verifier.hpp"

namespace malt {

/// Human-readable rendering: one line per verdict plus counterexamples.
std::string render_report_text(const IdentityReport& report);

/// Structured (JSON) rendering. Byte-stable: identical inputs, seed and
/// toolkit version produce identical bytes.
std::string render_report_json(const IdentityReport& report);

} // namespace malt

#endif
