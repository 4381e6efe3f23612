#include "nlom/schema.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nlom/grammar.hpp"

namespace nlom {

namespace {

using EnumSet = std::set<std::string, std::less<>>;

const EnumSet kMoods = {
    "statement", "question", "order", "full exclamation", "np", "adj",
    "circumstances", "subcircum", "about", "what terse exclamation",
    "how terse exclamation"};
const EnumSet kComplexities = {"simple", "complex", "compound", "compound_complex"};
const EnumSet kNumbers = {"sing", "plur"};
const EnumSet kPersons = {"first", "second", "third"};
const EnumSet kCases = {"nom", "acc"};
const EnumSet kSexes = {"masc", "fem", "neut"};
const EnumSet kGrads = {"abso", "comp", "supl"};
const EnumSet kVoices = {"active", "passive"};
const EnumSet kPositions = {"pre", "mid", "post"};
const EnumSet kAttributes = {"place", "time", "way", "other"};
const EnumSet kConnectors = {"and", "or", "neither_nor"};
const EnumSet kCoordinators = {"and", "or"};
const EnumSet kVerbTypes = {"be", "intransitive", "transitive", "ditransitive",
                            "mental_to", "link"};
const EnumSet kCompConnectors = {"as_as", "than", "too_to", "enough_to", "so_that"};
const EnumSet kQueryAdvs = {"where", "when", "why", "how"};

const EnumSet kNounTypes = {"perspronoun", "propnoun", "pronoun", "countable_noun",
                            "uncountable_noun", "number", "noun_clause"};
const EnumSet kCircTypes = {"adverb", "prep_phrase", "clause"};
const EnumSet kPredTypes = {"adjective", "noun_phrase", "prep_phrase"};
const EnumSet kAdvTypes = {"so_that", "so_as", "enough_to", "too_to", "adv_than"};
const EnumSet kClauseTypes = {"that", "whether", "whether_or_not", "query_clause",
                              "query_to", "normal_to"};

// Leaf tags whose enum set is position-independent.
const std::map<std::string, const EnumSet*, std::less<>> kEnumByTag = {
    {"mood", &kMoods},       {"complexity", &kComplexities},
    {"numb", &kNumbers},     {"pers", &kPersons},
    {"case", &kCases},       {"sex", &kSexes},
    {"grad", &kGrads},       {"voice", &kVoices},
    {"position", &kPositions}, {"attribute", &kAttributes},
    {"part_connector", &kConnectors}, {"verb_phrase_connector", &kConnectors},
    {"coordinator", &kCoordinators}, {"connector", &kCompConnectors},
    {"verb_type", &kVerbTypes}, {"query_adv", &kQueryAdvs},
};

// Free-text leaves: any non-empty text.
const std::set<std::string, std::less<>> kTextLeaves = {
    "word", "prep", "subordinator", "neg", "article", "determiner",
    "quantifier", "tense", "kernel_tense",
};

bool is_grid_mood(std::string_view mood) {
    return mood == "statement" || mood == "question" || mood == "full exclamation" ||
           mood == "subcircum" || mood == "order";
}

struct Checker {
    const SchemaOverlay& ov;
    std::vector<Issue> issues;
    // Node pointers, root first. Labels are derived on demand so repeated
    // sibling tags can be disambiguated with an ordinal ("noun[2]").
    std::vector<const MarkupNode*> stack;

    std::string path_str() const {
        std::string out = stack.empty() ? "nlml" : stack.front()->tag;
        for (std::size_t i = 1; i < stack.size(); ++i) {
            const MarkupNode* parent = stack[i - 1];
            const MarkupNode* node = stack[i];
            std::size_t total = 0, ord = 0;
            for (const auto& c : parent->children)
                if (c.tag == node->tag) {
                    ++total;
                    if (&c == node) ord = total;
                }
            out += '/';
            out += node->tag;
            if (total > 1) out += '[' + std::to_string(ord) + ']';
        }
        return out;
    }

    void report(IssueCode code, const std::string& msg) {
        issues.push_back(Issue{path_str(), code, msg});
    }

    bool wildcard(const std::string& tag) const {
        return ov.wildcard_tags.count(tag) > 0;
    }

    const EnumSet* enum_for(const std::string& tag) const {
        auto ovr = ov.enum_override.find(tag);
        if (ovr != ov.enum_override.end()) {
            static thread_local EnumSet tmp;
            tmp = EnumSet(ovr->second.begin(), ovr->second.end());
            return &tmp;
        }
        auto it = kEnumByTag.find(tag);
        return it == kEnumByTag.end() ? nullptr : it->second;
    }

    // Contextual `type` leaves: builtin set plus overlay extras.
    bool type_value_ok(const EnumSet& base, const std::string& value) const {
        return base.count(value) > 0 || ov.extra_type_values.count(value) > 0;
    }

    struct Scope {
        Checker& c;
        Scope(Checker& c, const MarkupNode& n) : c(c) { c.stack.push_back(&n); }
        ~Scope() { c.stack.pop_back(); }
    };

    void flag_text_in_container(const MarkupNode& n) {
        if (!n.text.empty())
            report(IssueCode::UnknownTag, "unexpected character data inside <" + n.tag + ">");
    }

    void unknown_child(const MarkupNode& child, const std::string& where) {
        Scope s(*this, child);
        report(IssueCode::UnknownTag, "<" + child.tag + "> is not allowed inside <" + where + ">");
    }

    // Leaf: non-empty text, optional enum membership, no children.
    void check_leaf(const MarkupNode& n) {
        Scope s(*this, n);
        for (const auto& c : n.children) {
            Scope cs(*this, c);
            report(IssueCode::UnknownTag, "<" + n.tag + "> takes text, not child elements");
        }
        if (n.text.empty()) {
            report(IssueCode::EmptyRequired, "<" + n.tag + "> must not be empty");
            return;
        }
        if (const EnumSet* values = enum_for(n.tag)) {
            if (!values->count(n.text))
                report(IssueCode::BadEnumValue,
                       "\"" + n.text + "\" is not a permitted value of <" + n.tag + ">");
        }
    }

    void check_type_leaf(const MarkupNode& n, const EnumSet& allowed) {
        Scope s(*this, n);
        if (n.text.empty()) {
            report(IssueCode::EmptyRequired, "<type> must not be empty");
            return;
        }
        if (!type_value_ok(allowed, n.text))
            report(IssueCode::BadEnumValue,
                   "\"" + n.text + "\" is not a permitted value of <type> here");
    }

    void require_child(const MarkupNode& n, const std::string& tag, const std::string& why) {
        if (!n.find(tag))
            report(IssueCode::MissingChild, "<" + n.tag + "> requires <" + tag + ">" +
                                                (why.empty() ? "" : " (" + why + ")"));
    }

    // --- noun phrase container: noun+ with an optional part connector ---

    void check_np_container(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        std::size_t parts = 0;
        std::size_t connectors = 0;
        for (const auto& c : n.children) {
            if (wildcard(c.tag)) continue;
            if (c.tag == "noun") {
                ++parts;
                check_noun(c);
            } else if (c.tag == "part_connector") {
                ++connectors;
                check_leaf(c);
            } else {
                unknown_child(c, n.tag);
            }
        }
        if (parts == 0)
            report(IssueCode::MissingChild, "<" + n.tag + "> requires at least one <noun>");
        if (connectors > 0 && parts < 2)
            report(IssueCode::ConnectorArity,
                   "part_connector requires at least two <noun> parts, found " +
                       std::to_string(parts));
        if (connectors == 0 && parts >= 2)
            report(IssueCode::ConnectorArity,
                   std::to_string(parts) + " <noun> parts need a part_connector");
        if (connectors > 1)
            report(IssueCode::ConnectorArity, "more than one part_connector");
    }

    void check_noun(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        const MarkupNode* type = n.find("type");
        for (const auto& c : n.children) {
            if (wildcard(c.tag)) continue;
            if (c.tag == "type") check_type_leaf(c, kNounTypes);
            else if (c.tag == "word" || c.tag == "numb" || c.tag == "pers" ||
                     c.tag == "case" || c.tag == "sex" || c.tag == "article" ||
                     c.tag == "determiner" || c.tag == "quantifier")
                check_leaf(c);
            else if (c.tag == "adj") check_adj(c);
            else if (c.tag == "prep_phrase") check_prep_phrase(c);
            else if (c.tag == "relative_clause") check_relative_clause(c);
            else if (c.tag == "noun_clause") check_noun_clause(c);
            else unknown_child(c, "noun");
        }
        if (!type) {
            report(IssueCode::MissingChild, "<noun> requires <type>");
            return;
        }
        if (type->text == "noun_clause") {
            require_child(n, "noun_clause", "type is noun_clause");
        } else {
            require_child(n, "word", "kernel word");
            if (n.find("noun_clause"))
                report(IssueCode::UnknownTag,
                       "<noun_clause> only allowed when type is noun_clause");
        }
    }

    // --- verb phrase -----------------------------------------------------

    void check_verb_phrase(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        std::size_t words = 0;
        for (const auto& c : n.children) {
            if (wildcard(c.tag)) continue;
            if (c.tag == "word") {
                ++words;
                check_leaf(c);
            } else if (c.tag == "pers" || c.tag == "numb" || c.tag == "voice" ||
                       c.tag == "tense" || c.tag == "kernel_tense" ||
                       c.tag == "verb_type" || c.tag == "neg")
                check_leaf(c);
            else if (c.tag == "direct_object" || c.tag == "indirect_object")
                check_np_container(c);
            else if (c.tag == "predicate") check_predicate(c);
            else if (c.tag == "noun_clause") check_noun_clause(c);
            else unknown_child(c, n.tag);
        }
        if (words == 0)
            report(IssueCode::MissingChild, "<" + n.tag + "> requires at least one <word>");
        const MarkupNode* vt = n.find("verb_type");
        if (!vt) {
            report(IssueCode::MissingChild, "<" + n.tag + "> requires <verb_type>");
            return;
        }
        const std::string& t = vt->text;
        auto forbid = [&](const char* tag, const char* why) {
            if (n.find(tag)) {
                Scope cs(*this, *n.find(tag));
                report(IssueCode::UnknownTag, std::string("<") + tag + "> " + why);
            }
        };
        if (t == "be" || t == "link") {
            require_child(n, "predicate", "verb_type " + t);
            forbid("direct_object", "is not part of the copular pattern");
            forbid("indirect_object", "is not part of the copular pattern");
        } else if (t == "transitive") {
            forbid("predicate", "only allowed for be/link verbs");
            forbid("indirect_object", "requires verb_type ditransitive");
        } else if (t == "ditransitive") {
            require_child(n, "direct_object", "verb_type ditransitive");
            require_child(n, "indirect_object", "verb_type ditransitive");
            forbid("predicate", "only allowed for be/link verbs");
        } else if (t == "intransitive") {
            forbid("direct_object", "is not part of the intransitive pattern");
            forbid("indirect_object", "is not part of the intransitive pattern");
            forbid("predicate", "only allowed for be/link verbs");
        } else if (t == "mental_to") {
            require_child(n, "noun_clause", "verb_type mental_to");
            forbid("predicate", "only allowed for be/link verbs");
            forbid("indirect_object", "is not part of the mental_to pattern");
        }
        if (t != "mental_to" && n.find("noun_clause"))
            forbid("noun_clause", "complement requires verb_type mental_to");
    }

    void check_predicate(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        const MarkupNode* type = n.find("type");
        for (const auto& c : n.children) {
            if (wildcard(c.tag)) continue;
            if (c.tag == "type") check_type_leaf(c, kPredTypes);
            else if (c.tag == "adj") check_adj(c);
            else if (c.tag == "np") check_np_container(c);
            else if (c.tag == "prep_phrase") check_prep_phrase(c);
            else if (c.tag == "connector") check_leaf(c);
            else unknown_child(c, "predicate");
        }
        if (!type) {
            report(IssueCode::MissingChild, "<predicate> requires <type>");
            return;
        }
        const std::string& t = type->text;
        if (t == "adjective") {
            require_child(n, "adj", "predicate type adjective");
            if (n.find("connector"))
                require_child(n, "np", "comparative complement");
            if (n.find("np") && !n.find("connector"))
                report(IssueCode::MissingChild, "comparative <np> requires <connector>");
            // A comparative and an adverb extent on the same adjective cannot
            // both claim the complement slot.
            if (n.find("connector") && n.find("adj")) {
                for (const auto& a : n.find("adj")->children)
                    if (a.tag == "adv" && a.find("type"))
                        report(IssueCode::ConnectorArity,
                               "comparative connector cannot co-occur with an adverb extent");
            }
        } else if (t == "noun_phrase") {
            require_child(n, "np", "predicate type noun_phrase");
            if (n.find("connector"))
                report(IssueCode::UnknownTag, "comparative only allowed for adjective predicates");
        } else if (t == "prep_phrase") {
            require_child(n, "prep_phrase", "predicate type prep_phrase");
            if (n.find("connector"))
                report(IssueCode::UnknownTag, "comparative only allowed for adjective predicates");
        }
    }

    void check_prep_phrase(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        for (const auto& c : n.children) {
            if (wildcard(c.tag)) continue;
            if (c.tag == "prep") check_leaf(c);
            else if (c.tag == "np") check_np_container(c);
            else unknown_child(c, "prep_phrase");
        }
        require_child(n, "prep", "");
        require_child(n, "np", "preposition object");
    }

    void check_adj(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        for (const auto& c : n.children) {
            if (wildcard(c.tag)) continue;
            if (c.tag == "word" || c.tag == "grad") check_leaf(c);
            else if (c.tag == "adv") check_adv(c);
            else unknown_child(c, "adj");
        }
        require_child(n, "word", "");
    }

    void check_adv(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        const MarkupNode* type = nullptr;
        for (const auto& c : n.children) {
            if (wildcard(c.tag)) continue;
            if (c.tag == "word" || c.tag == "grad") check_leaf(c);
            else if (c.tag == "type") { type = &c; check_type_leaf(c, kAdvTypes); }
            else if (c.tag == "np") check_np_container(c);
            else unknown_child(c, "adv");
        }
        require_child(n, "word", "");
        if (type && !n.find("np"))
            report(IssueCode::MissingChild, "extent adverb requires <np>");
        if (!type && n.find("np"))
            report(IssueCode::UnknownTag, "<np> requires an extent <type>");
    }

    void check_circum(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        const MarkupNode* type = n.find("type");
        for (const auto& c : n.children) {
            if (wildcard(c.tag)) continue;
            if (c.tag == "type") check_type_leaf(c, kCircTypes);
            else if (c.tag == "position" || c.tag == "attribute" || c.tag == "query_adv")
                check_leaf(c);
            else if (c.tag == "adv") check_adv(c);
            else if (c.tag == "prep_phrase") check_prep_phrase(c);
            else if (c.tag == "noun_clause") check_noun_clause(c);
            else unknown_child(c, "circum");
        }
        require_child(n, "type", "");
        require_child(n, "position", "");
        require_child(n, "attribute", "");
        if (!type) return;
        if (type->text == "adverb") require_child(n, "adv", "circumstance payload");
        else if (type->text == "prep_phrase") require_child(n, "prep_phrase", "circumstance payload");
        else if (type->text == "clause") require_child(n, "noun_clause", "circumstance payload");
    }

    // --- clauses ---------------------------------------------------------

    void check_noun_clause(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        const MarkupNode* type = n.find("type");
        if (!type) {
            report(IssueCode::MissingChild, "<noun_clause> requires <type>");
            return;
        }
        check_type_leaf(*type, kClauseTypes);
        bool to_clause = type->text == "query_to" || type->text == "normal_to";
        check_sentence_body(n, "statement", {"type"});
        std::size_t subjects = n.count("subject");
        if (to_clause && subjects > 0)
            report(IssueCode::UnknownTag, "to-infinitive clauses take no <subject>");
        if (!to_clause && kClauseTypes.count(type->text) && subjects == 0)
            report(IssueCode::MissingChild, "<noun_clause> of type " + type->text +
                                                " requires a <subject>");
    }

    void check_relative_clause(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        check_sentence_body(n, "statement", {});
        if (n.count("subject") > 1)
            report(IssueCode::UnknownTag, "<relative_clause> takes at most one <subject>");
    }

    // --- sentence content ------------------------------------------------

    // Verb slot: a single verb_phrase, or connector plus parts.
    void check_verb_slot(const MarkupNode& n, bool required) {
        std::size_t single = n.count("verb_phrase");
        std::size_t parts = n.count("verb_phrase_part");
        const MarkupNode* conn = n.find("verb_phrase_connector");
        if (single > 1)
            report(IssueCode::UnknownTag, "more than one <verb_phrase>");
        if (single > 0 && (conn || parts > 0))
            report(IssueCode::ConnectorArity,
                   "<verb_phrase> and <verb_phrase_connector>/<verb_phrase_part> are exclusive");
        if (conn && parts < 2)
            report(IssueCode::ConnectorArity,
                   "verb_phrase_connector requires at least two <verb_phrase_part> children, found " +
                       std::to_string(parts));
        if (!conn && parts > 0)
            report(IssueCode::ConnectorArity,
                   "<verb_phrase_part> requires <verb_phrase_connector>");
        if (required && single == 0 && parts == 0)
            report(IssueCode::MissingChild, "<" + n.tag + "> requires a verb phrase");
    }

    // Shared walker for anything that houses simple-sentence content.
    // `consumed` children are validated by the caller.
    void check_sentence_body(const MarkupNode& n, std::string_view mood,
                             const std::set<std::string, std::less<>>& consumed) {
        bool np_mood = mood == "np" || mood == "about" || mood == "what terse exclamation";
        bool adj_mood = mood == "adj" || mood == "how terse exclamation";
        bool circ_mood = mood == "circumstances";
        bool order = mood == "order";
        bool clause_body = n.tag == "noun_clause" || n.tag == "relative_clause";

        for (const auto& c : n.children) {
            if (wildcard(c.tag) || consumed.count(c.tag)) continue;
            if (c.tag == "subject") {
                if (np_mood || adj_mood || circ_mood || order)
                    unknown_child(c, n.tag);
                else
                    check_np_container(c);
            } else if (c.tag == "verb_phrase" || c.tag == "verb_phrase_part") {
                if (np_mood || adj_mood || circ_mood) unknown_child(c, n.tag);
                else check_verb_phrase(c);
            } else if (c.tag == "verb_phrase_connector") {
                check_leaf(c);
            } else if (c.tag == "circum") {
                if (np_mood || adj_mood) unknown_child(c, n.tag);
                else check_circum(c);
            } else if (c.tag == "neg") {
                check_leaf(c);
            } else if (c.tag == "np") {
                if (np_mood) check_np_container(c);
                else unknown_child(c, n.tag);
            } else if (c.tag == "adj") {
                if (adj_mood) check_adj(c);
                else unknown_child(c, n.tag);
            } else if (c.tag == "subordinator") {
                if (mood == "subcircum") check_leaf(c);
                else unknown_child(c, n.tag);
            } else if (c.tag == "mood") {
                if (clause_body || n.tag == "sub" || n.tag == "main") check_leaf(c);
                else unknown_child(c, n.tag);
            } else {
                unknown_child(c, n.tag);
            }
        }

        if (np_mood) {
            if (n.count("np") == 0)
                report(IssueCode::MissingChild, "mood \"" + std::string(mood) +
                                                    "\" requires an <np>");
            return;
        }
        if (adj_mood) {
            if (n.count("adj") == 0)
                report(IssueCode::MissingChild, "mood \"" + std::string(mood) +
                                                    "\" requires an <adj>");
            return;
        }
        if (circ_mood) {
            if (n.count("circum") == 0)
                report(IssueCode::MissingChild, "mood circumstances requires at least one <circum>");
            return;
        }

        bool subject_required = is_grid_mood(mood) && !order && !clause_body;
        if (subject_required && n.count("subject") == 0)
            report(IssueCode::MissingChild, "mood \"" + std::string(mood) +
                                                "\" requires at least one <subject>");
        if (mood == "subcircum" && !n.find("subordinator"))
            report(IssueCode::MissingChild, "mood subcircum requires <subordinator>");
        check_verb_slot(n, true);
    }

    // Nested sentence holder (<sub>, <main>): optional mood, then content.
    void check_nested_sentence(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        std::string mood = "statement";
        if (const MarkupNode* m = n.find("mood"))
            if (!m->text.empty()) mood = m->text;
        check_sentence_body(n, mood, {});
    }

    void check_complete_sentence(const MarkupNode& n) {
        Scope s(*this, n);
        flag_text_in_container(n);
        bool has_sub = n.find("sub") != nullptr;
        bool has_subordinator = n.find("subordinator") != nullptr;
        if (has_sub != has_subordinator)
            report(IssueCode::MissingChild,
                   "<complete_sentence> takes <subordinator> and <sub> together or not at all");
        for (const auto& c : n.children) {
            if (wildcard(c.tag)) continue;
            if (c.tag == "subordinator") check_leaf(c);
            else if (c.tag == "sub" || c.tag == "main") check_nested_sentence(c);
            else unknown_child(c, "complete_sentence");
        }
        require_child(n, "main", "");
    }

    void check_document(const MarkupNode& root) {
        flag_text_in_container(root);
        const MarkupNode* mood = root.find("mood");
        const MarkupNode* complexity = root.find("complexity");
        if (!mood) report(IssueCode::MissingChild, "document requires <mood>");
        else check_leaf(*mood);
        if (!complexity) report(IssueCode::MissingChild, "document requires <complexity>");
        else check_leaf(*complexity);
        if (root.count("mood") > 1)
            report(IssueCode::UnknownTag, "duplicate <mood>");
        if (root.count("complexity") > 1)
            report(IssueCode::UnknownTag, "duplicate <complexity>");

        std::string cx = complexity ? complexity->text : "simple";
        if (!kComplexities.count(cx)) cx = "simple";

        if (cx == "simple") {
            std::string m = mood && kMoods.count(mood->text) ? mood->text : "statement";
            check_sentence_body(root, m, {"mood", "complexity"});
            return;
        }

        // Structured complexities share a walker.
        std::size_t completes = 0;
        for (const auto& c : root.children) {
            if (wildcard(c.tag)) continue;
            if (c.tag == "mood" || c.tag == "complexity") continue;
            if (c.tag == "subordinator") {
                if (cx == "compound") unknown_child(c, "compound document");
                else check_leaf(c);
            } else if (c.tag == "sub") {
                if (cx == "compound") unknown_child(c, "compound document");
                else check_nested_sentence(c);
            } else if (c.tag == "main") {
                if (cx == "complex") check_nested_sentence(c);
                else unknown_child(c, cx + " document");
            } else if (c.tag == "coordinator") {
                if (cx == "complex") unknown_child(c, "complex document");
                else check_leaf(c);
            } else if (c.tag == "complete_sentence") {
                if (cx == "complex") unknown_child(c, "complex document");
                else { ++completes; check_complete_sentence(c); }
            } else {
                unknown_child(c, cx + " document");
            }
        }
        if (cx == "complex") {
            require_child(root, "subordinator", "complex sentence");
            require_child(root, "sub", "subordinate clause");
            require_child(root, "main", "main clause");
        } else {
            require_child(root, "coordinator", "");
            if (cx == "compound_complex") {
                require_child(root, "subordinator", "compound_complex sentence");
                require_child(root, "sub", "subordinate clause");
            }
            if (completes == 0)
                report(IssueCode::MissingChild, "coordination requires <complete_sentence> children");
            else if (completes == 1)
                report(IssueCode::ConnectorArity,
                       "coordination requires at least two <complete_sentence> children");
        }
    }
};

} // namespace

std::string_view to_string(IssueCode c) {
    switch (c) {
    case IssueCode::UnknownTag: return "UnknownTag";
    case IssueCode::MissingChild: return "MissingChild";
    case IssueCode::BadEnumValue: return "BadEnumValue";
    case IssueCode::ConnectorArity: return "ConnectorArity";
    case IssueCode::EmptyRequired: return "EmptyRequired";
    }
    return "?";
}

SchemaOverlay load_overlay(const std::string& path) {
    SchemaOverlay ov;
    std::ifstream in(path);
    if (!in)
        return ov;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string kind, name;
        ls >> kind >> name;
        if (kind == "tag" && !name.empty()) {
            ov.wildcard_tags.insert(name);
        } else if (kind == "enum" && !name.empty()) {
            std::string values;
            std::getline(ls, values);
            std::set<std::string> set;
            std::string cur;
            for (char c : values) {
                if (c == '|') {
                    if (!cur.empty()) set.insert(cur);
                    cur.clear();
                } else if (!(cur.empty() && (c == ' ' || c == '\t'))) {
                    cur += c;
                }
            }
            if (!cur.empty()) set.insert(cur);
            if (name == "type")
                ov.extra_type_values.insert(set.begin(), set.end());
            else
                ov.enum_override[name] = std::move(set);
        }
    }
    return ov;
}

SchemaOverlay overlay_from_env() {
    const char* path = std::getenv("NLOM_SCHEMA");
    if (!path || !*path)
        return SchemaOverlay{};
    return load_overlay(path);
}

ValidationReport validate_schema(const MarkupNode& root) {
    return validate_schema(root, overlay_from_env());
}

ValidationReport validate_schema(const MarkupNode& root, const SchemaOverlay& overlay) {
    Checker c{overlay, {}, {&root}};
    c.check_document(root);
    ValidationReport report;
    report.issues = std::move(c.issues);
    report.ok = report.issues.empty();
    return report;
}

const MarkupNode* resolve_issue_path(const MarkupNode& root, std::string_view path) {
    std::vector<std::string_view> segs;
    std::size_t start = 0;
    while (start <= path.size()) {
        std::size_t slash = path.find('/', start);
        if (slash == std::string_view::npos) {
            segs.push_back(path.substr(start));
            break;
        }
        segs.push_back(path.substr(start, slash - start));
        start = slash + 1;
    }
    if (segs.empty() || segs[0] != root.tag)
        return nullptr;
    const MarkupNode* cur = &root;
    for (std::size_t i = 1; i < segs.size(); ++i) {
        std::string_view seg = segs[i];
        std::size_t want = 1; // 1-based ordinal among same-tag siblings
        if (!seg.empty() && seg.back() == ']') {
            std::size_t open = seg.rfind('[');
            if (open == std::string_view::npos)
                return nullptr;
            want = 0;
            for (char ch : seg.substr(open + 1, seg.size() - open - 2)) {
                if (ch < '0' || ch > '9')
                    return nullptr;
                want = want * 10 + static_cast<std::size_t>(ch - '0');
            }
            seg = seg.substr(0, open);
        }
        const MarkupNode* next = nullptr;
        std::size_t seen = 0;
        for (const auto& c : cur->children)
            if (c.tag == seg && ++seen == want) { next = &c; break; }
        if (!next)
            return nullptr;
        cur = next;
    }
    return cur;
}

} // namespace nlom
