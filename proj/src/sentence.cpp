#include "nlom/sentence.hpp"

#include <algorithm>
#include <cctype>

#include "nlom/clause.hpp"
#include "nlom/errors.hpp"
#include "nlom/morphology.hpp"
#include "nlom/realize.hpp"

namespace nlom {

// The clause vectors are complete here, so the defaults can be generated.
SimpleSentence::SimpleSentence() = default;
SimpleSentence::SimpleSentence(const SimpleSentence&) = default;
SimpleSentence::SimpleSentence(SimpleSentence&&) noexcept = default;
SimpleSentence& SimpleSentence::operator=(const SimpleSentence&) = default;
SimpleSentence& SimpleSentence::operator=(SimpleSentence&&) noexcept = default;
SimpleSentence::~SimpleSentence() = default;
bool SimpleSentence::operator==(const SimpleSentence&) const = default;

const BasicSentence& BasicSentenceGrid::at(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * cols + col];
}

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };

std::string join(const std::vector<std::string>& words, const char* sep = " ") {
    std::string out;
    for (const auto& w : words) {
        if (w.empty()) continue;
        if (!out.empty()) out += sep;
        out += w;
    }
    return out;
}

std::string cap_first(std::string s) {
    if (!s.empty())
        s.front() = static_cast<char>(
            std::toupper(static_cast<unsigned char>(s.front())));
    return s;
}

MarkupNode leaf(std::string tag, std::string text) {
    MarkupNode n;
    n.tag = std::move(tag);
    n.text = std::move(text);
    return n;
}

// --- clause wiring -------------------------------------------------------

// Standalone phrase for the modified part, with the clause itself peeled
// off so its surface text stops before the relative clause ("the man").
NounPhrase modified_np(const NounPhrase& host, std::size_t part_index,
                       const RelativeClauseRef& ref) {
    NounPhrase out = single_part_phrase(host, part_index);
    NounPart& part = out.parts.front();
    std::erase_if(part.post_modifiers, [&](const PostModifier& pm) {
        return pm.kind == PostModifier::Kind::RelativeClause &&
               pm.relative.index == ref.index;
    });
    part.text = ref.modified_np_text;
    out.core.text = ref.modified_np_text;
    out.core.description =
        "noun phrase \"" + out.core.text + "\" (" + part.kernel_type + ")";
    return out;
}

// Walks one simple-sentence body (the top one or a clause's own), resolving
// every clause reference found in its phrases: grammatical role and hosting
// body for noun clauses, the modified noun phrase for relative clauses.
struct ClauseWiring {
    SimpleSentence& ss;
    std::vector<const SimpleSentence*>& parents;

    void noun_ref(const NounClauseRef& ref, ClauseRole role,
                  const SimpleSentence& scope) {
        ss.noun_clauses[ref.index].grammatical_role = role;
        parents[ref.index] = &scope;
    }

    void np(const NounPhrase& phrase, ClauseRole role,
            const SimpleSentence& scope) {
        for (std::size_t i = 0; i < phrase.parts.size(); ++i) {
            const NounPart& part = phrase.parts[i];
            if (part.clause) noun_ref(*part.clause, role, scope);
            for (const PostModifier& pm : part.post_modifiers) {
                if (pm.kind == PostModifier::Kind::RelativeClause)
                    set_modified_noun_phrase(ss.relative_clauses[pm.relative.index],
                                             modified_np(phrase, i, pm.relative));
                else if (const PrepPhrase* pp = pm.prep_phrase())
                    np(pp->object_np, ClauseRole::PrepObject, scope);
            }
        }
    }

    void vp(const VerbPhrase& phrase, const SimpleSentence& scope) {
        if (phrase.indirect_object) np(*phrase.indirect_object, ClauseRole::Object, scope);
        if (phrase.direct_object) np(*phrase.direct_object, ClauseRole::Object, scope);
        if (phrase.predicate) {
            const PredicatePhrase& pred = *phrase.predicate;
            if (pred.kind == PredicatePhrase::Kind::NounPhrase)
                np(std::get<NounPhrase>(pred.payload), ClauseRole::Object, scope);
            else if (pred.kind == PredicatePhrase::Kind::PrepPhrase)
                np(std::get<PrepPhrase>(pred.payload).object_np,
                   ClauseRole::PrepObject, scope);
        }
        if (phrase.clause_complement)
            noun_ref(*phrase.clause_complement, ClauseRole::Object, scope);
    }

    void circ(const Circumstance& c, const SimpleSentence& scope) {
        if (c.kind == Circumstance::Kind::PrepPhrase)
            np(std::get<PrepPhrase>(c.payload).object_np, ClauseRole::PrepObject,
               scope);
        else if (c.kind == Circumstance::Kind::Clause)
            noun_ref(std::get<NounClauseRef>(c.payload), ClauseRole::PrepObject,
                     scope);
    }

    void body(const SimpleSentence& scope) {
        for (const NounPhrase& s : scope.subjects) np(s, ClauseRole::Subject, scope);
        if (scope.np) np(*scope.np, ClauseRole::Subject, scope);
        for (const VerbPhrase& v : scope.verb_phrases) vp(v, scope);
        for (const Circumstance& c : scope.circumstances) circ(c, scope);
    }
};

void wire_clauses(SimpleSentence& ss) {
    std::vector<const SimpleSentence*> parents(ss.noun_clauses.size(), nullptr);
    ClauseWiring wiring{ss, parents};
    wiring.body(ss);
    for (const NounClause& nc : ss.noun_clauses) wiring.body(nc.base);
    for (const RelativeClause& rc : ss.relative_clauses) wiring.body(rc.base);
    for (std::size_t i = 0; i < ss.noun_clauses.size(); ++i)
        ss.noun_clauses[i].implied_text =
            compute_implied_text(ss.noun_clauses[i], parents[i]);
}

// --- basic-sentence construction -----------------------------------------

// Re-agree the finite head with a row subject. Modals never agree; past
// forms outside the auxiliary classes are already fixed.
VerbPhrase reinflect(VerbPhrase vp, Person p, GramNumber n) {
    vp.personality = p;
    vp.number = n;
    std::vector<std::string>& words = vp.verb_words;
    if (!words.empty()) {
        const std::string w0 = words.front();
        bool past = vp.tense == "past";
        if (morph::is_modal(w0)) {
            // unchanged
        } else if (morph::is_be_form(w0)) {
            words.front() = morph::be_form(past ? "past" : "present", p, n);
        } else if (morph::is_do_form(w0) && words.size() >= 2) {
            words.front() = morph::do_aux(past ? "past" : "present", p, n);
        } else if (morph::is_have_form(w0) && words.size() >= 2) {
            words.front() = past ? "had"
                            : (p == Person::Third && n == GramNumber::Sing)
                                ? "has"
                                : "have";
        } else if (!past) {
            words.front() = morph::present_form(morph::base_form(w0), p, n);
        }
    }
    vp.core.text = verb_phrase_surface(vp);
    return vp;
}

} // namespace

MarkupNode preprocess_clauses(const MarkupNode& node, SimpleSentence& ss) {
    MarkupNode out;
    out.tag = node.tag;
    out.text = node.text;
    for (const MarkupNode& child : node.children) {
        MarkupNode rewritten = preprocess_clauses(child, ss);
        if (rewritten.tag == "noun_clause") {
            NounClause nc = parse_noun_clause(rewritten, ss.id);
            nc.base.core.nlml = serialize_markup(child);
            nc.index = static_cast<int>(ss.noun_clauses.size());
            MarkupNode ref;
            ref.tag = "noun_clause_ref";
            ref.children.push_back(leaf("index", std::to_string(nc.index)));
            ref.children.push_back(leaf("text", nc.base.core.text));
            ss.noun_clauses.push_back(std::move(nc));
            out.children.push_back(std::move(ref));
        } else if (rewritten.tag == "relative_clause") {
            RelativeClause rc = parse_relative_clause(rewritten, ss.id);
            rc.base.core.nlml = serialize_markup(child);
            int index = static_cast<int>(ss.relative_clauses.size());
            MarkupNode ref;
            ref.tag = "relative_clause_ref";
            ref.children.push_back(leaf("index", std::to_string(index)));
            ref.children.push_back(leaf("text", rc.base.core.text));
            ss.relative_clauses.push_back(std::move(rc));
            out.children.push_back(std::move(ref));
        } else {
            out.children.push_back(std::move(rewritten));
        }
    }
    return out;
}

void parse_simple_body(const MarkupNode& body, SimpleSentence& ss) {
    if (const MarkupNode* n = body.find("neg")) ss.neg = n->text;
    if (std::string sub = body.child_text("subordinator"); !sub.empty())
        ss.subordinator = sub;
    for (const MarkupNode& c : body.children) {
        if (c.tag == "subject") {
            ss.subjects.push_back(parse_noun_phrase(c, ss.id));
        } else if (c.tag == "verb_phrase" || c.tag == "verb_phrase_part") {
            ss.verb_phrases.push_back(parse_verb_phrase(c, ss.id));
        } else if (c.tag == "verb_phrase_connector") {
            auto conn = connector_from_string(c.text);
            if (!conn)
                throw schema_error("unknown verb phrase connector \"" + c.text +
                                   "\"");
            ss.verb_connector = *conn;
        } else if (c.tag == "circum") {
            ss.circumstances.push_back(parse_circumstance(c, ss.id));
        } else if (c.tag == "np") {
            ss.np = parse_noun_phrase(c, ss.id);
        } else if (c.tag == "adj") {
            ss.adj = parse_adjective(c, ss.id);
        }
    }
    for (const Circumstance& c : ss.circumstances)
        if (!c.query_adv.empty()) {
            ss.query_adv = c.query_adv;
            break;
        }
}

BasicSentenceGrid construct_basic_sentences(SimpleSentence& ss) {
    if (ss.verb_phrases.empty())
        throw ModelError(ModelErrorCode::EmptyVerbPhrases,
                         "sentence has no verb phrases to build from");

    bool single_choice = false;
    bool neither = false;
    auto fold_connector = [&](Connector c) {
        if (c == Connector::Or) single_choice = true;
        if (c == Connector::NeitherNor) neither = true;
    };

    std::vector<std::optional<NounPhrase>> rows;
    for (const NounPhrase& subj : ss.subjects) {
        if (subj.part_connector) fold_connector(*subj.part_connector);
        if (subj.parts.size() <= 1)
            rows.emplace_back(subj);
        else
            for (std::size_t i = 0; i < subj.parts.size(); ++i)
                rows.emplace_back(single_part_phrase(subj, i));
    }
    if (rows.empty()) rows.emplace_back(std::nullopt);
    if (ss.verb_connector) fold_connector(*ss.verb_connector);

    BasicSentenceGrid grid;
    grid.rows = static_cast<int>(rows.size());
    grid.cols = static_cast<int>(ss.verb_phrases.size());
    grid.relation =
        single_choice ? Relation::SingleChoice : Relation::Independent;

    for (const auto& row : rows) {
        for (const VerbPhrase& col : ss.verb_phrases) {
            BasicSentence cell;
            cell.core.mood = ss.core.mood;
            cell.subject = row;
            VerbPhrase vp = col;
            if (row) vp = reinflect(std::move(vp), row->personality, row->number);
            if (neither) vp = negate_verb_phrase(vp);
            cell.verb_phrase = std::move(vp);
            cell.circumstances = ss.circumstances;
            cell.neg = ss.neg;
            cell.query_adv = ss.query_adv;
            cell.subordinator = ss.subordinator;
            cell.core.text = realize_basic(cell);
            cell.core.description = "basic sentence \"" + cell.core.text + "\"";
            grid.cells.push_back(std::move(cell));
        }
    }

    if (grid.cells.size() == 1) {
        ss.core.text = grid.cells.front().core.text;
    } else {
        std::vector<std::string> texts;
        for (const BasicSentence& c : grid.cells) texts.push_back(c.core.text);
        ss.core.text = join(
            texts, grid.relation == Relation::SingleChoice ? " or " : " and ");
    }
    ss.core.description = std::string(to_string(ss.core.mood)) + " sentence, " +
                          std::to_string(grid.rows) + "x" +
                          std::to_string(grid.cols) + " basic sentences (" +
                          std::string(to_string(grid.relation)) + ")";
    ss.basic_sentences = grid;
    return grid;
}

namespace {

SimpleSentence parse_simple(const MarkupNode& body, Mood mood,
                            std::optional<std::string> input, int id) {
    SimpleSentence ss;
    ss.core.mood = mood;
    ss.core.input = std::move(input);
    ss.id = id;
    ss.core.nlml = serialize_markup(body);

    MarkupNode rewritten = preprocess_clauses(body, ss);
    parse_simple_body(rewritten, ss);
    wire_clauses(ss);

    switch (mood) {
    case Mood::Np:
        if (!ss.np) throw schema_error("np mood without <np>");
        ss.core.text = ss.np->core.text;
        break;
    case Mood::About:
        if (!ss.np) throw schema_error("about mood without <np>");
        ss.core.text = "about " + ss.np->core.text;
        break;
    case Mood::WhatTerseExclamation:
        if (!ss.np) throw schema_error("what terse exclamation without <np>");
        ss.core.text = "what " + ss.np->core.text + "!";
        break;
    case Mood::Adj:
        if (!ss.adj) throw schema_error("adj mood without <adj>");
        ss.core.text = ss.adj->core.text;
        break;
    case Mood::HowTerseExclamation:
        if (!ss.adj) throw schema_error("how terse exclamation without <adj>");
        ss.core.text = "how " + ss.adj->core.text + "!";
        break;
    case Mood::Circumstances: {
        if (ss.circumstances.empty())
            throw schema_error("circumstances mood without <circum>");
        std::vector<std::string> texts;
        for (const Circumstance& c : ss.circumstances)
            texts.push_back(circumstance_text(c));
        ss.core.text = join(texts, ", ");
        break;
    }
    case Mood::Subcircum:
        if (!ss.subordinator)
            throw schema_error("subcircum mood without <subordinator>");
        construct_basic_sentences(ss);
        break;
    default:
        construct_basic_sentences(ss);
        break;
    }
    if (!ss.basic_sentences)
        ss.core.description = std::string(to_string(mood)) + " phrase \"" +
                              ss.core.text + "\"";
    return ss;
}

CompleteSentence parse_complete(const MarkupNode& node, Mood mood,
                                int& next_id) {
    CompleteSentence out;
    std::string sub_word = node.child_text("subordinator");
    const MarkupNode* sub = node.find("sub");
    const MarkupNode* main_part = node.find("main");
    if (!main_part)
        throw schema_error("<complete_sentence> without <main>");
    if ((sub != nullptr) != !sub_word.empty())
        throw schema_error(
            "<complete_sentence> takes <subordinator> and <sub> together");
    if (sub) {
        out.subordinator = sub_word;
        out.sub = parse_simple(*sub, Mood::Statement, std::nullopt, next_id++);
    }
    out.main = parse_simple(*main_part, mood, std::nullopt, next_id++);
    return out;
}

std::string join_completes(const std::vector<CompleteSentence>& members,
                           Coordinator coordinator) {
    std::string word = coordinator == Coordinator::Or ? "or" : "and";
    std::string out = members.front().text();
    for (std::size_t i = 1; i < members.size(); ++i)
        out += ", " + word + " " + members[i].text();
    return out;
}

} // namespace

std::string complex_text(const std::string& subordinator,
                         const SimpleSentence& sub,
                         const SimpleSentence& main) {
    return cap_first(subordinator) + " " + sub.core.text + ", " +
           main.core.text;
}

std::string CompleteSentence::text() const {
    if (subordinator && sub) return complex_text(*subordinator, *sub, main);
    return main.core.text;
}

Sentence parse_sentence(const MarkupNode& root,
                        std::optional<std::string> input) {
    const MarkupNode* body = &root;
    if (!root.find("mood"))
        if (const MarkupNode* wrapped = root.find("sentence")) body = wrapped;

    std::string mood_text = body->child_text("mood");
    auto mood = mood_from_string(mood_text);
    if (!mood) throw schema_error("unknown mood \"" + mood_text + "\"");
    std::string complexity = body->child_text("complexity");
    int next_id = 0;

    if (complexity == "simple")
        return parse_simple(*body, *mood, std::move(input), next_id);

    if (complexity == "complex") {
        ComplexSentence cs;
        cs.core.mood = *mood;
        cs.core.input = std::move(input);
        cs.core.nlml = serialize_markup(*body);
        cs.subordinator = body->child_text("subordinator");
        const MarkupNode* sub = body->find("sub");
        const MarkupNode* main_part = body->find("main");
        if (cs.subordinator.empty() || !sub || !main_part)
            throw schema_error(
                "complex sentence needs <subordinator>, <sub> and <main>");
        cs.sub = parse_simple(*sub, Mood::Statement, std::nullopt, next_id++);
        cs.main = parse_simple(*main_part, *mood, std::nullopt, next_id++);
        cs.core.text = complex_text(cs.subordinator, cs.sub, cs.main);
        cs.core.description = "complex sentence \"" + cs.core.text + "\"";
        return cs;
    }

    if (complexity == "compound") {
        CompoundSentence cs;
        cs.core.mood = *mood;
        cs.core.input = std::move(input);
        cs.core.nlml = serialize_markup(*body);
        auto coordinator = coordinator_from_string(body->child_text("coordinator"));
        if (!coordinator)
            throw schema_error("compound sentence needs an and/or <coordinator>");
        cs.coordinator = *coordinator;
        for (const MarkupNode* m : body->find_all("complete_sentence"))
            cs.complete_sentences.push_back(parse_complete(*m, *mood, next_id));
        if (cs.complete_sentences.size() < 2)
            throw schema_error(
                "compound sentence needs at least two <complete_sentence>");
        cs.core.text = join_completes(cs.complete_sentences, cs.coordinator);
        cs.core.description = "compound sentence \"" + cs.core.text + "\"";
        return cs;
    }

    if (complexity == "compound_complex") {
        CompoundComplexSentence cc;
        cc.core.mood = *mood;
        cc.core.input = std::move(input);
        cc.core.nlml = serialize_markup(*body);
        cc.subordinator = body->child_text("subordinator");
        const MarkupNode* sub = body->find("sub");
        if (cc.subordinator.empty() || !sub)
            throw schema_error(
                "compound_complex sentence needs <subordinator> and <sub>");
        cc.sub = parse_simple(*sub, Mood::Statement, std::nullopt, next_id++);
        auto coordinator = coordinator_from_string(body->child_text("coordinator"));
        if (!coordinator)
            throw schema_error(
                "compound_complex sentence needs an and/or <coordinator>");
        cc.main.coordinator = *coordinator;
        for (const MarkupNode* m : body->find_all("complete_sentence"))
            cc.main.complete_sentences.push_back(
                parse_complete(*m, *mood, next_id));
        if (cc.main.complete_sentences.size() < 2)
            throw schema_error(
                "compound_complex sentence needs at least two "
                "<complete_sentence>");
        cc.core.text =
            cap_first(cc.subordinator) + " " + cc.sub.core.text + ", " +
            join_completes(cc.main.complete_sentences, cc.main.coordinator);
        cc.core.description =
            "compound_complex sentence \"" + cc.core.text + "\"";
        return cc;
    }

    throw ModelError(ModelErrorCode::UnsupportedComplexity,
                     "unsupported complexity \"" + complexity + "\"");
}

Sentence parse_sentence(const std::string& nlml,
                        std::optional<std::string> input) {
    return parse_sentence(parse_markup(nlml), std::move(input));
}

const SentenceCore& core_of(const Sentence& s) {
    return std::visit([](const auto& v) -> const SentenceCore& { return v.core; },
                      s);
}

std::string_view sentence_kind(const Sentence& s) {
    return std::visit(
        overloaded{
            [](const SimpleSentence&) { return std::string_view("simple"); },
            [](const ComplexSentence&) { return std::string_view("complex"); },
            [](const CompoundSentence&) { return std::string_view("compound"); },
            [](const CompoundComplexSentence&) {
                return std::string_view("compound_complex");
            }},
        s);
}

namespace {

std::variant<ComplexSentence, SimpleSentence>
decompose_member(const CompleteSentence& member,
                 const std::optional<std::string>& outer_subordinator,
                 const SimpleSentence* outer_sub, Mood mood) {
    const std::optional<std::string>& sub_word =
        member.subordinator ? member.subordinator : outer_subordinator;
    const SimpleSentence* sub = member.sub ? &*member.sub : outer_sub;
    if (sub_word && sub) {
        ComplexSentence cs;
        cs.core.mood = mood;
        cs.subordinator = *sub_word;
        cs.sub = *sub;
        cs.main = member.main;
        cs.core.text = complex_text(cs.subordinator, cs.sub, cs.main);
        cs.core.description = "complex sentence \"" + cs.core.text + "\"";
        return cs;
    }
    return member.main;
}

} // namespace

DecompositionResult decompose(const Sentence& s) {
    DecompositionResult out;
    std::visit(
        overloaded{
            [&](const SimpleSentence& ss) { out.sentences.emplace_back(ss); },
            [&](const ComplexSentence& cs) { out.sentences.emplace_back(cs); },
            [&](const CompoundSentence& cs) {
                out.relation = cs.coordinator == Coordinator::Or
                                   ? Relation::SingleChoice
                                   : Relation::Independent;
                for (const CompleteSentence& m : cs.complete_sentences)
                    out.sentences.push_back(decompose_member(
                        m, std::nullopt, nullptr, cs.core.mood));
            },
            [&](const CompoundComplexSentence& cc) {
                out.relation = cc.main.coordinator == Coordinator::Or
                                   ? Relation::SingleChoice
                                   : Relation::Independent;
                for (const CompleteSentence& m : cc.main.complete_sentences)
                    out.sentences.push_back(decompose_member(
                        m, cc.subordinator, &cc.sub, cc.core.mood));
            }},
        s);
    return out;
}

} // namespace nlom
