#include "nlom/realize.hpp"

#include <algorithm>

#include "nlom/errors.hpp"
#include "nlom/morphology.hpp"

namespace nlom {

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

// Verb words with the phrase's own negation folded in, one token per word.
std::vector<std::string> effective_words(const VerbPhrase& vp) {
    std::vector<std::string> words = vp.verb_words;
    if (vp.neg && std::find(words.begin(), words.end(), *vp.neg) == words.end()) {
        if (!words.empty() && morph::is_aux_word(words.front()) && words.size() > 1)
            words.insert(words.begin() + 1, *vp.neg);
        else
            words.insert(words.begin(), *vp.neg);
    }
    return words;
}

// The constituent a question/fronting rule pivots on. Subjects win (no
// inversion there), then an interrogative adverb, then an object or
// predicate inside the verb phrase, then a prepositional circumstance.
struct QueryPick {
    enum class Source { None, Subject, Vp, Circ };
    Source source = Source::None;
    std::string text;
    int circ = -1; // index of the circumstance serving as the query
};

QueryPick pick_query(const BasicSentence& bs) {
    if (bs.subject)
        if (auto q = get_query_text(*bs.subject))
            return {QueryPick::Source::Subject, *q, -1};
    for (std::size_t i = 0; i < bs.circumstances.size(); ++i)
        if (!bs.circumstances[i].query_adv.empty())
            return {QueryPick::Source::Circ, bs.circumstances[i].query_adv,
                    static_cast<int>(i)};
    if (auto q = get_query_text(bs.verb_phrase))
        return {QueryPick::Source::Vp, *q, -1};
    for (std::size_t i = 0; i < bs.circumstances.size(); ++i)
        if (!bs.circumstances[i].core.query_text.empty())
            return {QueryPick::Source::Circ, bs.circumstances[i].core.query_text,
                    static_cast<int>(i)};
    return {};
}

std::vector<Circumstance> drop_circ(const std::vector<Circumstance>& circs,
                                    int index) {
    std::vector<Circumstance> out = circs;
    if (index >= 0 && index < static_cast<int>(out.size()))
        out.erase(out.begin() + index);
    return out;
}

// Append verb words and the non-fronted objects/predicate as core slots;
// anchor mid circumstances after an auxiliary head, else before the verb.
void append_vp_slots(const VerbPhrase& vp, bool exclude_query,
                     RealizationPlan& plan) {
    std::vector<std::string> words = effective_words(vp);
    int base = static_cast<int>(plan.core_slots.size());
    plan.mid_insert =
        base + (!words.empty() && morph::is_aux_word(words.front()) ? 1 : 0);
    for (auto& w : words) plan.core_slots.push_back(std::move(w));
    auto push_np = [&](const std::optional<NounPhrase>& np) {
        if (np && !(exclude_query && !np->core.query_text.empty()))
            plan.core_slots.push_back(np->core.text);
    };
    push_np(vp.indirect_object);
    push_np(vp.direct_object);
    if (vp.predicate && !(exclude_query && !vp.predicate->core.query_text.empty()))
        plan.core_slots.push_back(vp.predicate->core.text);
    if (vp.clause_complement)
        plan.core_slots.push_back(vp.clause_complement->text);
}

std::string realize_statement(const BasicSentence& bs) {
    QueryPick q = pick_query(bs);
    RealizationPlan plan;
    if (bs.core.mood == Mood::Subcircum && bs.subordinator)
        plan.fronted.push_back(*bs.subordinator);
    std::vector<Circumstance> circs = drop_circ(bs.circumstances, q.circ);
    bool fronting = q.source == QueryPick::Source::Vp ||
                    q.source == QueryPick::Source::Circ;
    if (fronting) plan.fronted.push_back(q.text);
    if (bs.subject) plan.core_slots.push_back(bs.subject->core.text);
    append_vp_slots(bs.verb_phrase, fronting, plan);
    return place_circumstances(circs, std::move(plan)).join();
}

std::string realize_question(const BasicSentence& bs) {
    QueryPick q = pick_query(bs);
    RealizationPlan plan;
    plan.punctuation = "?";
    std::vector<Circumstance> circs = drop_circ(bs.circumstances, q.circ);
    if (q.source == QueryPick::Source::Subject) {
        // query subject: no inversion
        plan.core_slots.push_back(bs.subject->core.text);
        append_vp_slots(bs.verb_phrase, false, plan);
    } else {
        if (q.source != QueryPick::Source::None) plan.fronted.push_back(q.text);
        AuxSplit split = split_auxiliary(bs.verb_phrase);
        plan.core_slots.push_back(split.aux);
        if (bs.subject) plan.core_slots.push_back(bs.subject->core.text);
        plan.mid_insert = static_cast<int>(plan.core_slots.size());
        for (auto& r : split.remainder) plan.core_slots.push_back(std::move(r));
    }
    return place_circumstances(circs, std::move(plan)).join();
}

std::string realize_order(const BasicSentence& bs) {
    RealizationPlan plan;
    if (bs.neg) plan.core_slots.push_back(*bs.neg);
    append_vp_slots(bs.verb_phrase, false, plan);
    return place_circumstances(bs.circumstances, std::move(plan)).join();
}

} // namespace

std::string RealizationPlan::join() const {
    std::vector<std::string> all;
    all.insert(all.end(), fronted.begin(), fronted.end());
    all.insert(all.end(), core_slots.begin(), core_slots.end());
    all.insert(all.end(), trailing.begin(), trailing.end());
    return nlom::join(all) + punctuation;
}

RealizationPlan place_circumstances(const std::vector<Circumstance>& circs,
                                    RealizationPlan plan) {
    std::vector<std::string> mids;
    for (const auto& c : circs) {
        switch (c.position) {
        case PositionSlot::Pre: plan.fronted.push_back(circumstance_text(c)); break;
        case PositionSlot::Mid: mids.push_back(circumstance_text(c)); break;
        case PositionSlot::Post: plan.trailing.push_back(circumstance_text(c)); break;
        }
    }
    int at = std::clamp(plan.mid_insert, 0,
                        static_cast<int>(plan.core_slots.size()));
    plan.core_slots.insert(plan.core_slots.begin() + at, mids.begin(), mids.end());
    return plan;
}

std::string realize_basic(const BasicSentence& bs) {
    switch (bs.core.mood) {
    case Mood::Statement:
    case Mood::Subcircum:
        return realize_statement(bs);
    case Mood::Question:
        return realize_question(bs);
    case Mood::Order:
        return realize_order(bs);
    case Mood::FullExclamation: {
        bool how = bs.verb_phrase.predicate &&
                   bs.verb_phrase.predicate->kind == PredicatePhrase::Kind::Adjective;
        return realize_exclamation(bs, how ? Opener::How : Opener::What);
    }
    default:
        throw ModelError(ModelErrorCode::UnrealizableMood,
                         "mood \"" + std::string(to_string(bs.core.mood)) +
                             "\" realizes as a phrase, not a basic sentence");
    }
}

std::string realize_exclamation(const BasicSentence& bs, Opener opener) {
    const VerbPhrase& vp = bs.verb_phrase;
    RealizationPlan plan;
    plan.punctuation = "!";
    if (opener == Opener::What) {
        const NounPhrase* obj = nullptr;
        if (vp.direct_object) obj = &*vp.direct_object;
        else if (vp.predicate && vp.predicate->kind == PredicatePhrase::Kind::NounPhrase)
            obj = &std::get<NounPhrase>(vp.predicate->payload);
        if (!obj)
            throw ModelError(ModelErrorCode::MissingObject,
                             "what-exclamation needs an object phrase");
        plan.fronted = {"what", obj->core.text};
        if (bs.subject) plan.core_slots.push_back(bs.subject->core.text);
        std::vector<std::string> words = effective_words(vp);
        plan.mid_insert = static_cast<int>(plan.core_slots.size());
        for (auto& w : words) plan.core_slots.push_back(std::move(w));
        if (vp.indirect_object)
            plan.core_slots.push_back(vp.indirect_object->core.text);
        if (vp.direct_object && obj != &*vp.direct_object)
            plan.core_slots.push_back(vp.direct_object->core.text);
    } else {
        if (!vp.predicate || vp.predicate->kind != PredicatePhrase::Kind::Adjective)
            throw ModelError(ModelErrorCode::MissingPredicateAdjective,
                             "how-exclamation needs a predicate adjective");
        plan.fronted = {"how", std::get<Adjective>(vp.predicate->payload).core.text};
        if (bs.subject) plan.core_slots.push_back(bs.subject->core.text);
        std::vector<std::string> words = effective_words(vp);
        plan.mid_insert = static_cast<int>(plan.core_slots.size());
        for (auto& w : words) plan.core_slots.push_back(std::move(w));
    }
    return place_circumstances(bs.circumstances, std::move(plan)).join();
}

VerbPhrase negate_verb_phrase(const VerbPhrase& vp) {
    VerbPhrase out = vp;
    std::vector<std::string>& words = out.verb_words;
    const std::string w0 = words.front();
    bool aux_head = morph::is_modal(w0) || morph::is_be_form(w0) ||
                    ((morph::is_have_form(w0) || morph::is_do_form(w0)) &&
                     words.size() >= 2);
    if (aux_head) {
        words.insert(words.begin() + 1, "not");
    } else {
        bool past = vp.tense == "past";
        std::string aux = morph::do_aux(past ? "past" : "present",
                                        vp.personality, vp.number);
        words.front() = morph::base_form(w0);
        words.insert(words.begin(), {aux, "not"});
    }
    out.core.text = verb_phrase_surface(out);
    return out;
}

} // namespace nlom
