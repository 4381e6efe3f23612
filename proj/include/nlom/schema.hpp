#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nlom/markup.hpp"

namespace nlom {

enum class IssueCode { UnknownTag, MissingChild, BadEnumValue, ConnectorArity, EmptyRequired };

std::string_view to_string(IssueCode c);

struct Issue {
    std::string path; // slash-joined tag path from the root, e.g. "nlml/mood"
    IssueCode code;
    std::string message;

    bool operator==(const Issue&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Issue> issues;
};

// Testing hook (env var NLOM_SCHEMA): extra tags accepted anywhere with
// unchecked content, plus enum-set replacements. See docs/nlml-schema.md.
struct SchemaOverlay {
    std::set<std::string> wildcard_tags;
    std::map<std::string, std::set<std::string>> enum_override;
    std::set<std::string> extra_type_values;
};

SchemaOverlay load_overlay(const std::string& path);
SchemaOverlay overlay_from_env();

/// Check a parsed tree against the canonical NLML schema. Collects every
/// violation; never throws on bad input.
ValidationReport validate_schema(const MarkupNode& root);
ValidationReport validate_schema(const MarkupNode& root, const SchemaOverlay& overlay);

/// Walk an issue path ("nlml/subject/noun") from the root. A segment may carry
/// a 1-based ordinal ("noun[2]") when the tag repeats among its siblings;
/// without one the first match is taken. Returns nullptr only for paths that
/// name no existing node; paths produced by validate_schema always resolve.
const MarkupNode* resolve_issue_path(const MarkupNode& root, std::string_view path);

} // namespace nlom
