#pragma once

#include <string>

#include "nlom/sentence.hpp"

namespace nlom {

// Version tag written into every dump; load_json refuses anything else.
inline constexpr const char* kDumpVersion = "1";

// Serialize the full object model (all variants, phrases, clauses, grids)
// to JSON text. indent < 0 gives the compact single-line form.
std::string dump_json(const Sentence& s, int indent = 2);

// Rebuild a sentence from dump_json output. The result compares equal to
// the value that was dumped. Malformed documents and unknown enum values
// raise ModelError(SchemaViolation); version mismatches likewise.
Sentence load_json(const std::string& text);

} // namespace nlom
