#include "nlom/clause.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "nlom/errors.hpp"
#include "nlom/morphology.hpp"
#include "nlom/realize.hpp"

namespace nlom {

std::string_view to_string(ClauseType t) {
    switch (t) {
    case ClauseType::That: return "that";
    case ClauseType::Whether: return "whether";
    case ClauseType::WhetherOrNot: return "whether_or_not";
    case ClauseType::QueryClause: return "query_clause";
    case ClauseType::QueryTo: return "query_to";
    case ClauseType::NormalTo: return "normal_to";
    }
    return "";
}

std::string_view to_string(ClauseRole r) {
    switch (r) {
    case ClauseRole::Subject: return "subject";
    case ClauseRole::Object: return "object";
    case ClauseRole::PrepObject: return "prep_object";
    }
    return "";
}

std::string_view to_string(RelativeForm f) {
    return f == RelativeForm::Full ? "full" : "terse";
}

std::string_view to_string(TerseKind k) {
    switch (k) {
    case TerseKind::PresentParticiple: return "present_participle";
    case TerseKind::PastParticiple: return "past_participle";
    case TerseKind::PassiveInfinitive: return "passive_infinitive";
    }
    return "";
}

std::optional<ClauseType> clause_type_from_string(std::string_view s) {
    if (s == "that") return ClauseType::That;
    if (s == "whether") return ClauseType::Whether;
    if (s == "whether_or_not") return ClauseType::WhetherOrNot;
    if (s == "query_clause") return ClauseType::QueryClause;
    if (s == "query_to") return ClauseType::QueryTo;
    if (s == "normal_to") return ClauseType::NormalTo;
    return std::nullopt;
}

namespace {

std::string join(const std::vector<std::string>& words) {
    std::string out;
    for (const auto& w : words) {
        if (w.empty()) continue;
        if (!out.empty()) out += ' ';
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

// Replace the first whole-word occurrence (space-delimited token match).
std::string replace_word(const std::string& text, const std::string& word,
                         const std::string& with) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    bool done = false;
    while (in >> tok) {
        if (!done && tok == word) {
            tokens.push_back(with);
            done = true;
        } else {
            tokens.push_back(tok);
        }
    }
    return join(tokens);
}

BasicSentence to_basic(const SimpleSentence& base) {
    BasicSentence bs;
    bs.core.mood = Mood::Statement;
    if (!base.subjects.empty()) bs.subject = base.subjects.front();
    bs.verb_phrase = base.verb_phrases.front();
    bs.circumstances = base.circumstances;
    bs.neg = base.neg;
    bs.query_adv = base.query_adv;
    return bs;
}

// Query constituent of a clause body: the interrogative adverb, an object
// or predicate inside the verb phrase, a prepositional circumstance, or the
// subject itself.
struct BaseQuery {
    std::string text;
    int circ = -1;
    bool from_subject = false;
};

BaseQuery find_base_query(const SimpleSentence& base) {
    if (!base.subjects.empty())
        if (auto q = get_query_text(base.subjects.front()))
            return {*q, -1, true};
    for (std::size_t i = 0; i < base.circumstances.size(); ++i)
        if (!base.circumstances[i].query_adv.empty())
            return {base.circumstances[i].query_adv, static_cast<int>(i), false};
    if (!base.verb_phrases.empty())
        if (auto q = get_query_text(base.verb_phrases.front()))
            return {*q, -1, false};
    for (std::size_t i = 0; i < base.circumstances.size(); ++i)
        if (!base.circumstances[i].core.query_text.empty())
            return {base.circumstances[i].core.query_text, static_cast<int>(i),
                    false};
    return {};
}

// "to" + verb words + (non-query) objects + circumstances, optionally led
// by the clause's query word ("how to finish the work", "to come today").
std::string infinitive_text(const SimpleSentence& base, bool front_query) {
    const VerbPhrase& vp = base.verb_phrases.front();
    BaseQuery q = front_query ? find_base_query(base) : BaseQuery{};
    std::vector<std::string> toks;
    if (!q.text.empty()) toks.push_back(q.text);
    toks.push_back("to");
    for (const auto& w : vp.verb_words) toks.push_back(w);
    auto push_np = [&](const std::optional<NounPhrase>& np) {
        if (np && (!front_query || np->core.query_text.empty()))
            toks.push_back(np->core.text);
    };
    push_np(vp.indirect_object);
    push_np(vp.direct_object);
    if (vp.predicate && (!front_query || vp.predicate->core.query_text.empty()))
        toks.push_back(vp.predicate->core.text);
    for (std::size_t i = 0; i < base.circumstances.size(); ++i)
        if (static_cast<int>(i) != q.circ)
            toks.push_back(circumstance_text(base.circumstances[i]));
    return join(toks);
}

// Circumstance texts excluding the query circumstance.
std::vector<std::string> plain_circ_texts(const SimpleSentence& base,
                                          int skip) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < base.circumstances.size(); ++i)
        if (static_cast<int>(i) != skip)
            out.push_back(circumstance_text(base.circumstances[i]));
    return out;
}

// Host verbs whose to-complement is a commitment ("will") vs an obligation
// ("should"). Reconstructed mapping; anything else defaults to "will".
std::string modal_for_host_verb(std::string_view base_verb) {
    static const std::set<std::string, std::less<>> should{
        "ask", "require", "order", "tell", "advise", "need", "request"};
    return should.count(base_verb) ? "should" : "will";
}

} // namespace

NounClause parse_noun_clause(const MarkupNode& node, int parent_id) {
    NounClause nc;
    nc.parent_id = parent_id;
    std::string type_text = node.child_text("type");
    auto ct = clause_type_from_string(type_text);
    if (!ct)
        throw ModelError(ModelErrorCode::UnknownClauseType,
                         "unknown noun clause type \"" + type_text + "\"");
    nc.clause_type = *ct;

    nc.base.id = parent_id;
    nc.base.core.mood = Mood::Statement;
    nc.base.core.nlml = serialize_markup(node);
    parse_simple_body(node, nc.base);
    if (nc.base.verb_phrases.empty())
        throw schema_error("noun clause without a verb phrase");
    if ((nc.clause_type == ClauseType::QueryTo ||
         nc.clause_type == ClauseType::NormalTo) &&
        !nc.base.subjects.empty())
        throw schema_error("to-infinitive clause cannot carry a subject");

    switch (nc.clause_type) {
    case ClauseType::That:
        nc.base.core.text = "that " + realize_basic(to_basic(nc.base));
        break;
    case ClauseType::Whether:
        nc.base.core.text = "whether " + realize_basic(to_basic(nc.base));
        break;
    case ClauseType::WhetherOrNot:
        nc.base.core.text =
            "whether " + realize_basic(to_basic(nc.base)) + " or not";
        break;
    case ClauseType::QueryClause:
        // statement path fronts the query word on its own
        nc.base.core.text = realize_basic(to_basic(nc.base));
        break;
    case ClauseType::QueryTo:
        nc.base.core.text = infinitive_text(nc.base, true);
        break;
    case ClauseType::NormalTo:
        nc.base.core.text = infinitive_text(nc.base, false);
        break;
    }
    nc.base.core.description = "noun clause (" +
                               std::string(to_string(nc.clause_type)) + ") \"" +
                               nc.base.core.text + "\"";
    return nc;
}

std::string compute_implied_text(const NounClause& nc,
                                 const SimpleSentence* parent) {
    switch (nc.clause_type) {
    case ClauseType::That:
    case ClauseType::Whether:
    case ClauseType::WhetherOrNot:
        return nc.base.core.text;

    case ClauseType::QueryClause: {
        BasicSentence bs = to_basic(nc.base);
        bs.core.mood = Mood::Question;
        return realize_basic(bs);
    }

    case ClauseType::QueryTo: {
        const VerbPhrase& vp = nc.base.verb_phrases.front();
        BaseQuery q = find_base_query(nc.base);
        std::string query = q.text.empty() ? "what" : q.text;
        std::vector<std::string> toks;
        if (nc.grammatical_role == ClauseRole::Subject) {
            // suitable for all people: "a person" asks on everyone's behalf
            AuxSplit split = split_auxiliary(vp, Person::Third, GramNumber::Sing);
            toks.push_back(cap_first(query));
            toks.push_back(split.aux);
            toks.push_back("a person");
            for (auto& r : split.remainder) toks.push_back(std::move(r));
        } else {
            if (!parent || parent->subjects.empty())
                throw ModelError(ModelErrorCode::MissingParent,
                                 "query_to clause in object role needs the "
                                 "host sentence's subject");
            const NounPhrase& subj = parent->subjects.front();
            AuxSplit split = split_auxiliary(vp, subj.personality, subj.number);
            toks.push_back(query);
            toks.push_back(split.aux);
            toks.push_back(morph::nominative(subj.core.text));
            for (auto& r : split.remainder) toks.push_back(std::move(r));
        }
        for (auto& c : plain_circ_texts(nc.base, q.circ)) toks.push_back(std::move(c));
        return join(toks) + "?";
    }

    case ClauseType::NormalTo: {
        const VerbPhrase* host = nullptr;
        if (parent)
            for (const auto& vp : parent->verb_phrases)
                if (vp.clause_complement && vp.clause_complement->index == nc.index)
                    host = &vp;
        if (!host || !host->direct_object)
            // mental state of the host subject; no standalone implication
            return nc.base.core.text;
        const VerbPhrase& vp = nc.base.verb_phrases.front();
        std::vector<std::string> toks;
        toks.push_back(morph::nominative(host->direct_object->core.text));
        toks.push_back(modal_for_host_verb(morph::base_form(host->core.kernel)));
        for (const auto& w : vp.verb_words) toks.push_back(w);
        if (vp.indirect_object) toks.push_back(vp.indirect_object->core.text);
        if (vp.direct_object) toks.push_back(vp.direct_object->core.text);
        if (vp.predicate) toks.push_back(vp.predicate->core.text);
        for (auto& c : plain_circ_texts(nc.base, -1)) toks.push_back(std::move(c));
        return join(toks);
    }
    }
    return nc.base.core.text;
}

RelativeClause parse_relative_clause(const MarkupNode& node, int parent_id) {
    RelativeClause rc;
    rc.base.id = parent_id;
    rc.base.core.mood = Mood::Statement;
    rc.base.core.nlml = serialize_markup(node);
    parse_simple_body(node, rc.base);
    if (rc.base.verb_phrases.empty())
        throw schema_error("relative clause without a verb phrase");

    const VerbPhrase& vp = rc.base.verb_phrases.front();
    if (!rc.base.subjects.empty()) {
        rc.form = RelativeForm::Full;
        BaseQuery q = find_base_query(rc.base);
        std::string stext = realize_basic(to_basic(rc.base));
        if (q.text.empty()) {
            rc.relative_word = "which";
            rc.base.core.text = "which " + stext;
        } else {
            rc.relative_word = q.text;
            rc.base.core.text = stext;
        }
    } else {
        rc.form = RelativeForm::Terse;
        rc.relative_word.clear();
        if (vp.voice == Voice::Passive)
            rc.terse_kind = vp.tense == "future" ? TerseKind::PassiveInfinitive
                                                 : TerseKind::PastParticiple;
        else
            rc.terse_kind = TerseKind::PresentParticiple;
        std::vector<std::string> toks;
        if (*rc.terse_kind == TerseKind::PassiveInfinitive) toks.push_back("to");
        for (const auto& w : vp.verb_words) toks.push_back(w);
        if (vp.indirect_object) toks.push_back(vp.indirect_object->core.text);
        if (vp.direct_object) toks.push_back(vp.direct_object->core.text);
        if (vp.predicate) toks.push_back(vp.predicate->core.text);
        for (auto& c : plain_circ_texts(rc.base, -1)) toks.push_back(std::move(c));
        rc.base.core.text = join(toks);
    }
    rc.base.core.description = "relative clause (" +
                               std::string(to_string(rc.form)) + ") \"" +
                               rc.base.core.text + "\"";
    return rc;
}

void set_modified_noun_phrase(RelativeClause& rc, const NounPhrase& np) {
    if (rc.modified_noun_phrase)
        throw ModelError(ModelErrorCode::AlreadySet,
                         "modified noun phrase already set");
    rc.modified_noun_phrase = np;
    rc.implied_statement = compute_implied_statement(rc);
}

std::string compute_implied_statement(const RelativeClause& rc) {
    if (!rc.modified_noun_phrase)
        throw ModelError(ModelErrorCode::MissingModifiedNP,
                         "relative clause has no modified noun phrase yet");
    const NounPhrase& np = *rc.modified_noun_phrase;
    const VerbPhrase& vp = rc.base.verb_phrases.front();

    if (rc.form == RelativeForm::Full) {
        // statement order with the query phrase kept in place, then the
        // query word gives way to the modified noun phrase
        std::vector<std::string> toks;
        if (!rc.base.subjects.empty())
            toks.push_back(rc.base.subjects.front().core.text);
        toks.push_back(vp.core.text);
        for (auto& c : plain_circ_texts(rc.base, -1)) toks.push_back(std::move(c));
        return replace_word(join(toks), rc.relative_word, np.core.text);
    }

    std::vector<std::string> toks{np.core.text};
    switch (*rc.terse_kind) {
    case TerseKind::PresentParticiple:
        toks.push_back(morph::be_form(vp.tense == "past" ? "past" : "present",
                                      np.personality, np.number));
        break;
    case TerseKind::PastParticiple:
        toks.push_back(morph::be_form("past", np.personality, np.number));
        break;
    case TerseKind::PassiveInfinitive:
        toks.push_back("should");
        break;
    }
    for (const auto& w : vp.verb_words) toks.push_back(w);
    if (vp.indirect_object) toks.push_back(vp.indirect_object->core.text);
    if (vp.direct_object) toks.push_back(vp.direct_object->core.text);
    if (vp.predicate) toks.push_back(vp.predicate->core.text);
    for (auto& c : plain_circ_texts(rc.base, -1)) toks.push_back(std::move(c));
    return join(toks);
}

} // namespace nlom
