#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nlom/errors.hpp"

namespace nlom {

/// One element of an NLML document: a lowercase tag, the character data
/// directly inside it, and its child elements in document order.
///
/// Top-level siblings of a document are collected under a synthetic root
/// node tagged "nlml". The root is an ordinary node; serialization simply
/// omits its own tag.
struct MarkupNode {
    std::string tag;
    std::string text;
    std::vector<MarkupNode> children;

    bool operator==(const MarkupNode&) const = default;

    /// First direct child with the given tag, or nullptr.
    const MarkupNode* find(std::string_view child_tag) const;
    MarkupNode* find(std::string_view child_tag);

    /// All direct children with the given tag, in document order.
    std::vector<const MarkupNode*> find_all(std::string_view child_tag) const;

    /// Number of direct children with the given tag.
    std::size_t count(std::string_view child_tag) const;

    /// Trimmed text of the first direct child with the given tag, or "".
    std::string child_text(std::string_view child_tag) const;
};

/// Parse NLML text into a tag tree rooted at a synthetic "nlml" node.
///
/// Tag names must match [a-z_]+. Only nested elements are supported; there
/// are no attributes, comments, or CDATA. The entities &lt; &gt; &amp; are
/// decoded in character data. Whitespace-only runs between sibling tags are
/// dropped; character data inside a leaf is trimmed of surrounding
/// whitespace but otherwise kept byte-exact.
///
/// Throws MarkupError (UnbalancedTag, UnterminatedTag, IllegalTagName) with
/// the byte offset of the failure.
MarkupNode parse_markup(std::string_view text);

/// Serialize a tree back to NLML text. The synthetic "nlml" root is not
/// emitted; its children become top-level siblings. parse_markup on the
/// result reproduces the tree structurally.
std::string serialize_markup(const MarkupNode& root);

/// Indented form for human inspection. Re-parsing it yields the same tree
/// (inter-tag whitespace is insignificant).
std::string serialize_markup_pretty(const MarkupNode& root);

} // namespace nlom
