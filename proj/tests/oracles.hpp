// Independent reference implementations used by the test suites. These are
// deliberately written against the raw input formats, not against the
// library's own code paths, so they can disagree with the implementation.
#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nlom::test {

// --- Bracket-matching scanner -----------------------------------------
//
// Walks NLML text character by character and records one event per tag:
// ("open", name, depth) / ("close", name, depth) / ("text", data, depth).
// Depth counts open elements, the synthetic document root excluded.

struct TagEvent {
    std::string kind; // "open", "close", "text"
    std::string payload;
    int depth = 0;

    bool operator==(const TagEvent&) const = default;
};

inline std::vector<TagEvent> oracle_scan_markup(std::string_view in) {
    std::vector<TagEvent> events;
    std::vector<std::string> stack;
    std::string pending;
    std::size_t i = 0;

    auto flush_text = [&]() {
        std::size_t a = pending.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) {
            pending.clear();
            return;
        }
        std::size_t b = pending.find_last_not_of(" \t\r\n");
        events.push_back({"text", pending.substr(a, b - a + 1), (int)stack.size()});
        pending.clear();
    };

    while (i < in.size()) {
        if (in[i] != '<') {
            if (in[i] == '&') {
                if (in.compare(i, 4, "&lt;") == 0) { pending += '<'; i += 4; continue; }
                if (in.compare(i, 4, "&gt;") == 0) { pending += '>'; i += 4; continue; }
                if (in.compare(i, 5, "&amp;") == 0) { pending += '&'; i += 5; continue; }
            }
            pending += in[i++];
            continue;
        }
        flush_text();
        ++i;
        bool closing = i < in.size() && in[i] == '/';
        if (closing) ++i;
        std::string name;
        while (i < in.size() && in[i] != '>') {
            char c = in[i];
            if (!((c >= 'a' && c <= 'z') || c == '_'))
                throw std::runtime_error("oracle: bad tag name char at " + std::to_string(i));
            name += c;
            ++i;
        }
        if (i >= in.size())
            throw std::runtime_error("oracle: unterminated tag");
        ++i; // '>'
        if (name.empty())
            throw std::runtime_error("oracle: empty tag name");
        if (closing) {
            if (stack.empty() || stack.back() != name)
                throw std::runtime_error("oracle: unbalanced close " + name);
            stack.pop_back();
            events.push_back({"close", name, (int)stack.size()});
        } else {
            events.push_back({"open", name, (int)stack.size()});
            stack.push_back(name);
        }
    }
    flush_text();
    if (!stack.empty())
        throw std::runtime_error("oracle: unclosed tag " + stack.back());
    return events;
}

// --- Tag counting ------------------------------------------------------

// Number of <name> openings in raw NLML text, nesting included.
inline int oracle_count_tag(std::string_view in, std::string_view name) {
    int n = 0;
    for (const auto& e : oracle_scan_markup(in))
        if (e.kind == "open" && e.payload == name) ++n;
    return n;
}

// --- Morphology table --------------------------------------------------
//
// Hand-checked lookup table for the verbs used by the randomized grid
// fixtures. Kept as literal data on purpose: the implementation derives
// these forms from rules, the oracle just knows them.

inline const std::map<std::string, std::string>& oracle_third_singular_table() {
    static const std::map<std::string, std::string> t = {
        {"come", "comes"},   {"sing", "sings"},    {"dance", "dances"},
        {"go", "goes"},      {"play", "plays"},    {"watch", "watches"},
        {"finish", "finishes"}, {"try", "tries"},  {"rain", "rains"},
        {"work", "works"},   {"laugh", "laughs"},
    };
    return t;
}

// Surface of a present-tense basic sentence with a third-singular subject.
inline std::string oracle_basic_text(const std::string& subject, const std::string& verb_base,
                                     bool negated, const std::string& trailing_circ = "") {
    std::string s = subject + " ";
    if (negated)
        s += "does not " + verb_base;
    else
        s += oracle_third_singular_table().at(verb_base);
    if (!trailing_circ.empty())
        s += " " + trailing_circ;
    return s;
}

// Row-major cross product of subject parts and verb bases.
inline std::vector<std::string> oracle_enumerate_cells(const std::vector<std::string>& subjects,
                                                       const std::vector<std::string>& verbs,
                                                       bool negated,
                                                       const std::string& trailing_circ = "") {
    std::vector<std::string> out;
    for (const auto& s : subjects)
        for (const auto& v : verbs)
            out.push_back(oracle_basic_text(s, v, negated, trailing_circ));
    return out;
}

// Count "not"/"n't" tokens in a realized string.
inline int oracle_count_negations(std::string_view text) {
    int n = 0;
    std::string token;
    auto take = [&]() {
        if (token == "not" || (token.size() >= 3 && token.substr(token.size() - 3) == "n't"))
            ++n;
        token.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '?' || c == '!' || c == '.' || c == ',')
            take();
        else
            token += c;
    }
    take();
    return n;
}

} // namespace nlom::test
