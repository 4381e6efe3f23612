#include "nlom/morphology.hpp"

#include <array>
#include <map>
#include <set>

namespace nlom::morph {

namespace {

const std::set<std::string, std::less<>> kModals = {
    "will", "would", "shall", "should", "can", "could", "may", "might", "must"};
const std::set<std::string, std::less<>> kBeForms = {
    "be", "am", "is", "are", "was", "were", "been", "being"};
const std::set<std::string, std::less<>> kHaveForms = {"have", "has", "had", "having"};
const std::set<std::string, std::less<>> kDoForms = {"do", "does", "did"};
const std::set<std::string, std::less<>> kQueryWords = {
    "who", "whom", "whose", "what", "which", "where", "when", "why", "how"};

// Inflected form -> base for the verbs whose past/participle is not reachable
// by suffix stripping.
const std::map<std::string, std::string, std::less<>> kIrregularBase = {
    {"met", "meet"},     {"came", "come"},    {"saw", "see"},
    {"took", "take"},    {"ran", "run"},      {"gave", "give"},
    {"made", "make"},    {"knew", "know"},    {"got", "get"},
    {"said", "say"},     {"thought", "think"}, {"brought", "bring"},
    {"went", "go"},      {"sang", "sing"},    {"wrote", "write"},
    {"written", "write"}, {"found", "find"},  {"told", "tell"},
};

bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.substr(w.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Stems that take -es instead of -s in the third person singular.
bool takes_es(std::string_view base) {
    return ends_with(base, "s") || ends_with(base, "x") || ends_with(base, "z") ||
           ends_with(base, "ch") || ends_with(base, "sh") || ends_with(base, "o");
}

} // namespace

bool is_modal(std::string_view w) { return kModals.count(w) > 0; }
bool is_be_form(std::string_view w) { return kBeForms.count(w) > 0; }
bool is_have_form(std::string_view w) { return kHaveForms.count(w) > 0; }
bool is_do_form(std::string_view w) { return kDoForms.count(w) > 0; }

bool is_aux_word(std::string_view w) {
    return is_modal(w) || is_be_form(w) || is_have_form(w) || is_do_form(w);
}

bool is_query_word(std::string_view w) { return kQueryWords.count(w) > 0; }

std::string third_singular(std::string_view base) {
    if (base == "be") return "is";
    if (base == "have") return "has";
    if (base == "do") return "does";
    std::string w(base);
    if (w.size() >= 2 && w.back() == 'y' && !is_vowel(w[w.size() - 2]))
        return w.substr(0, w.size() - 1) + "ies";
    if (takes_es(w))
        return w + "es";
    return w + "s";
}

std::string base_form(std::string_view word) {
    if (is_be_form(word)) return "be";
    if (is_have_form(word)) return "have";
    if (is_do_form(word)) return "do";
    if (word == "goes") return "go";
    if (auto it = kIrregularBase.find(word); it != kIrregularBase.end())
        return it->second;
    std::string w(word);
    if (ends_with(w, "ies") && w.size() > 3)
        return w.substr(0, w.size() - 3) + "y";
    if (ends_with(w, "ied") && w.size() > 3)
        return w.substr(0, w.size() - 3) + "y";
    if (ends_with(w, "es") && takes_es(w.substr(0, w.size() - 2)))
        return w.substr(0, w.size() - 2);
    if (ends_with(w, "ed") && w.size() > 3) {
        std::string stem = w.substr(0, w.size() - 2);
        // danced -> dance, moved -> move: restore the elided final e.
        if (ends_with(stem, "c") || ends_with(stem, "v") || ends_with(stem, "u"))
            return stem + "e";
        return stem;
    }
    if (ends_with(w, "s") && !ends_with(w, "ss") && w.size() > 2)
        return w.substr(0, w.size() - 1);
    return w;
}

std::string present_form(std::string_view base, Person p, GramNumber n) {
    if (p == Person::Third && n == GramNumber::Sing)
        return third_singular(base);
    if (base == "be")
        return p == Person::First && n == GramNumber::Sing ? "am" : "are";
    return std::string(base);
}

std::string do_aux(std::string_view tense, Person p, GramNumber n) {
    if (tense == "past") return "did";
    if (p == Person::Third && n == GramNumber::Sing) return "does";
    return "do";
}

std::string be_form(std::string_view tense, Person p, GramNumber n) {
    bool sing = n == GramNumber::Sing;
    if (tense == "past")
        return sing && p != Person::Second ? "was" : "were";
    if (sing && p == Person::First) return "am";
    if (sing && p == Person::Third) return "is";
    return "are";
}

std::string nominative(std::string_view pronoun) {
    static const std::map<std::string, std::string, std::less<>> table = {
        {"me", "I"},   {"him", "he"},  {"her", "she"},
        {"us", "we"},  {"them", "they"}, {"whom", "who"},
    };
    if (auto it = table.find(pronoun); it != table.end())
        return it->second;
    return std::string(pronoun);
}

} // namespace nlom::morph
