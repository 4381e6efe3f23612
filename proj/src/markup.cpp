#include "nlom/markup.hpp"

#include <sstream>

namespace nlom {

namespace {

bool tag_char(char c) {
    return (c >= 'a' && c <= 'z') || c == '_';
}

bool space_char(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && space_char(s[a])) ++a;
    while (b > a && space_char(s[b - 1])) --b;
    return s.substr(a, b - a);
}

void escape_into(std::string& out, const std::string& text) {
    for (char c : text) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
}

struct Parser {
    std::string_view in;
    std::size_t pos = 0;

    [[noreturn]] void fail(MarkupErrorCode code, std::size_t at, const std::string& msg) {
        throw MarkupError(code, at, msg);
    }

    // Reads the name between '<' (already consumed) and '>'.
    std::string read_name(std::size_t open_at) {
        std::string name;
        while (pos < in.size() && in[pos] != '>') {
            char c = in[pos];
            if (!tag_char(c))
                fail(MarkupErrorCode::IllegalTagName, pos,
                     std::string("illegal character '") + c + "' in tag name");
            name += c;
            ++pos;
        }
        if (pos >= in.size())
            fail(MarkupErrorCode::UnterminatedTag, open_at, "input ends inside a tag");
        ++pos; // '>'
        if (name.empty())
            fail(MarkupErrorCode::IllegalTagName, open_at, "empty tag name");
        return name;
    }

    MarkupNode run() {
        MarkupNode root;
        root.tag = "nlml";
        std::vector<MarkupNode*> stack{&root};
        std::vector<std::size_t> open_offsets;
        std::string pending;

        auto flush_text = [&]() {
            std::string t = trim(pending);
            pending.clear();
            if (t.empty())
                return;
            MarkupNode* top = stack.back();
            if (!top->text.empty())
                top->text += " ";
            top->text += t;
        };

        while (pos < in.size()) {
            char c = in[pos];
            if (c == '<') {
                std::size_t open_at = pos;
                flush_text();
                ++pos;
                if (pos < in.size() && in[pos] == '/') {
                    ++pos;
                    std::string name = read_name(open_at);
                    if (stack.size() == 1)
                        fail(MarkupErrorCode::UnbalancedTag, open_at,
                             "closing tag </" + name + "> without a matching opening tag");
                    if (stack.back()->tag != name)
                        fail(MarkupErrorCode::UnbalancedTag, open_at,
                             "closing tag </" + name + "> does not match open <" +
                                 stack.back()->tag + ">");
                    stack.pop_back();
                    open_offsets.pop_back();
                } else {
                    std::string name = read_name(open_at);
                    stack.back()->children.push_back(MarkupNode{name, "", {}});
                    stack.push_back(&stack.back()->children.back());
                    open_offsets.push_back(open_at);
                }
            } else if (c == '&') {
                if (in.compare(pos, 4, "&lt;") == 0) { pending += '<'; pos += 4; }
                else if (in.compare(pos, 4, "&gt;") == 0) { pending += '>'; pos += 4; }
                else if (in.compare(pos, 5, "&amp;") == 0) { pending += '&'; pos += 5; }
                else { pending += c; ++pos; }
            } else {
                pending += c;
                ++pos;
            }
        }
        flush_text();
        if (stack.size() > 1)
            fail(MarkupErrorCode::UnterminatedTag, open_offsets.back(),
                 "element <" + stack.back()->tag + "> is never closed");
        return root;
    }
};

void serialize_node(std::string& out, const MarkupNode& n) {
    out += '<';
    out += n.tag;
    out += '>';
    escape_into(out, n.text);
    for (const auto& c : n.children)
        serialize_node(out, c);
    out += "</";
    out += n.tag;
    out += '>';
}

void serialize_pretty_node(std::string& out, const MarkupNode& n, int indent) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += '<';
    out += n.tag;
    out += '>';
    escape_into(out, n.text);
    if (!n.children.empty()) {
        out += '\n';
        for (const auto& c : n.children)
            serialize_pretty_node(out, c, indent + 1);
        out.append(static_cast<std::size_t>(indent) * 2, ' ');
    }
    out += "</";
    out += n.tag;
    out += ">\n";
}

} // namespace

const MarkupNode* MarkupNode::find(std::string_view child_tag) const {
    for (const auto& c : children)
        if (c.tag == child_tag)
            return &c;
    return nullptr;
}

MarkupNode* MarkupNode::find(std::string_view child_tag) {
    for (auto& c : children)
        if (c.tag == child_tag)
            return &c;
    return nullptr;
}

std::vector<const MarkupNode*> MarkupNode::find_all(std::string_view child_tag) const {
    std::vector<const MarkupNode*> out;
    for (const auto& c : children)
        if (c.tag == child_tag)
            out.push_back(&c);
    return out;
}

std::size_t MarkupNode::count(std::string_view child_tag) const {
    std::size_t n = 0;
    for (const auto& c : children)
        if (c.tag == child_tag)
            ++n;
    return n;
}

std::string MarkupNode::child_text(std::string_view child_tag) const {
    const MarkupNode* c = find(child_tag);
    return c ? c->text : std::string();
}

MarkupNode parse_markup(std::string_view text) {
    Parser p{text};
    return p.run();
}

std::string serialize_markup(const MarkupNode& root) {
    std::string out;
    if (root.tag == "nlml") {
        escape_into(out, root.text);
        for (const auto& c : root.children)
            serialize_node(out, c);
    } else {
        serialize_node(out, root);
    }
    return out;
}

std::string serialize_markup_pretty(const MarkupNode& root) {
    std::string out;
    if (root.tag == "nlml") {
        for (const auto& c : root.children)
            serialize_pretty_node(out, c, 0);
    } else {
        serialize_pretty_node(out, root, 0);
    }
    return out;
}

} // namespace nlom
