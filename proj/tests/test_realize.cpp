#include "doctest.h"

#include "nlom/errors.hpp"
#include "nlom/markup.hpp"
#include "nlom/realize.hpp"
#include "oracles.hpp"

using namespace nlom;

namespace {

MarkupNode fragment(const std::string& nlml, const char* tag) {
    MarkupNode root = parse_markup(nlml);
    const MarkupNode* n = root.find(tag);
    REQUIRE_MESSAGE(n, "fragment lacks <" << tag << ">");
    return *n;
}

NounPhrase subject(const std::string& inner) {
    return parse_noun_phrase(fragment("<subject>" + inner + "</subject>", "subject"), 0);
}

VerbPhrase verb(const std::string& inner) {
    return parse_verb_phrase(fragment("<verb_phrase>" + inner + "</verb_phrase>",
                                      "verb_phrase"), 0);
}

Circumstance circ(const std::string& inner) {
    return parse_circumstance(fragment("<circum>" + inner + "</circum>", "circum"), 0);
}

const char* kYou =
    "<noun><type>perspronoun</type><word>you</word><numb>sing</numb>"
    "<pers>second</pers><case>nom</case></noun>";
const char* kHe =
    "<noun><type>perspronoun</type><word>he</word><numb>sing</numb>"
    "<pers>third</pers><case>nom</case><sex>masc</sex></noun>";

BasicSentence statement(const char* subj, const std::string& vp_inner) {
    BasicSentence bs;
    bs.subject = subject(subj);
    bs.verb_phrase = verb(vp_inner);
    return bs;
}

} // namespace

TEST_CASE("plan join drops empty slots and appends punctuation") {
    RealizationPlan plan;
    plan.fronted = {"where"};
    plan.core_slots = {"do", "", "you", "live"};
    plan.punctuation = "?";
    CHECK(plan.join() == "where do you live?");
}

TEST_CASE("circumstance placement: pre fronts, post trails, mid splits the core") {
    RealizationPlan plan;
    plan.core_slots = {"is", "under discussion"};
    plan.mid_insert = 1;
    std::vector<Circumstance> circs = {
        circ("<type>adverb</type><position>post</position><attribute>place</attribute>"
             "<adv><word>here</word></adv>"),
        circ("<type>adverb</type><position>mid</position><attribute>time</attribute>"
             "<adv><word>still</word></adv>"),
        circ("<type>adverb</type><position>pre</position><attribute>time</attribute>"
             "<adv><word>today</word></adv>"),
    };
    CHECK(place_circumstances(circs, plan).join() ==
          "today is still under discussion here");
}

TEST_CASE("statement keeps subject-verb order") {
    BasicSentence bs = statement(kYou,
        "<pers>second</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>come</word>");
    CHECK(realize_basic(bs) == "you come");
}

TEST_CASE("mid circumstance lands after an auxiliary, before a plain verb") {
    BasicSentence bs = statement(kYou,
        "<pers>second</pers><numb>sing</numb><voice>active</voice>"
        "<tense>future</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>will</word><word>come</word>");
    bs.circumstances.push_back(
        circ("<type>adverb</type><position>mid</position><attribute>time</attribute>"
             "<adv><word>still</word></adv>"));
    CHECK(realize_basic(bs) == "you will still come");

    BasicSentence plain = statement(kYou,
        "<pers>second</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>come</word>");
    plain.circumstances = bs.circumstances;
    CHECK(realize_basic(plain) == "you still come");
}

TEST_CASE("yes/no question inverts with do-support") {
    BasicSentence bs = statement(kYou,
        "<pers>second</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>live</word>");
    bs.core.mood = Mood::Question;
    bs.circumstances.push_back(
        circ("<type>adverb</type><position>post</position><attribute>place</attribute>"
             "<adv><word>here</word></adv>"));
    CHECK(realize_basic(bs) == "do you live here?");
}

TEST_CASE("interrogative adverb fronts and its circumstance is consumed") {
    BasicSentence bs = statement(kYou,
        "<pers>second</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>live</word>");
    bs.core.mood = Mood::Question;
    bs.circumstances.push_back(
        circ("<type>adverb</type><position>pre</position><attribute>place</attribute>"
             "<query_adv>where</query_adv><adv><word>where</word></adv>"));
    CHECK(realize_basic(bs) == "where do you live?");
}

TEST_CASE("query subject asks without inversion") {
    BasicSentence bs;
    bs.core.mood = Mood::Question;
    bs.subject = subject(
        "<noun><type>pronoun</type><word>who</word><numb>sing</numb>"
        "<pers>third</pers><case>nom</case></noun>");
    bs.verb_phrase = verb(
        "<pers>third</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>comes</word>");
    CHECK(realize_basic(bs) == "who comes?");
}

TEST_CASE("prepositional query fronts the whole phrase") {
    BasicSentence bs = statement(kYou,
        "<pers>second</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>talk</word>");
    bs.core.mood = Mood::Question;
    bs.circumstances.push_back(
        circ("<type>prep_phrase</type><position>post</position>"
             "<attribute>other</attribute><prep_phrase><prep>about</prep>"
             "<np><noun><type>pronoun</type><word>what</word><numb>sing</numb>"
             "<pers>third</pers><case>acc</case></noun></np></prep_phrase>"));
    CHECK(realize_basic(bs) == "about what do you talk?");
}

TEST_CASE("order realizes bare, negation word first") {
    BasicSentence bs;
    bs.core.mood = Mood::Order;
    bs.verb_phrase = verb(
        "<pers>second</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>go</word>");
    CHECK(realize_basic(bs) == "go");
    bs.neg = "don't";
    CHECK(realize_basic(bs) == "don't go");
}

TEST_CASE("what-exclamation fronts the object") {
    BasicSentence bs = statement(
        "<noun><type>perspronoun</type><word>it</word><numb>sing</numb>"
        "<pers>third</pers><case>nom</case></noun>",
        "<pers>third</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>be</verb_type><word>is</word><predicate>"
        "<type>noun_phrase</type><np><noun><type>countable_noun</type>"
        "<article>a</article><adj><word>nice</word><grad>abso</grad></adj>"
        "<word>day</word><numb>sing</numb><pers>third</pers><case>acc</case>"
        "</noun></np></predicate>");
    bs.core.mood = Mood::FullExclamation;
    CHECK(realize_basic(bs) == "what a nice day it is!");
}

TEST_CASE("how-exclamation fronts the predicate adjective") {
    BasicSentence bs = statement(kHe,
        "<pers>third</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>be</verb_type><word>is</word><predicate>"
        "<type>adjective</type><adj><word>tall</word><grad>abso</grad></adj>"
        "</predicate>");
    bs.core.mood = Mood::FullExclamation;
    CHECK(realize_basic(bs) == "how tall he is!");
}

TEST_CASE("exclamation openers validate their pivot") {
    BasicSentence none = statement(kHe,
        "<pers>third</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>comes</word>");
    CHECK_THROWS_AS(realize_exclamation(none, Opener::What), ModelError);
    CHECK_THROWS_AS(realize_exclamation(none, Opener::How), ModelError);
    try {
        realize_exclamation(none, Opener::What);
    } catch (const ModelError& e) {
        CHECK(e.code() == ModelErrorCode::MissingObject);
    }
    try {
        realize_exclamation(none, Opener::How);
    } catch (const ModelError& e) {
        CHECK(e.code() == ModelErrorCode::MissingPredicateAdjective);
    }
}

TEST_CASE("phrase moods refuse basic realization") {
    BasicSentence bs = statement(kHe,
        "<pers>third</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>comes</word>");
    bs.core.mood = Mood::Np;
    CHECK_THROWS_AS(realize_basic(bs), ModelError);
    try {
        realize_basic(bs);
    } catch (const ModelError& e) {
        CHECK(e.code() == ModelErrorCode::UnrealizableMood);
    }
}

TEST_CASE("negating a plain verb adds do-support") {
    VerbPhrase vp = verb(
        "<pers>third</pers><numb>sing</numb><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>comes</word>");
    VerbPhrase neg = negate_verb_phrase(vp);
    CHECK(neg.verb_words == std::vector<std::string>{"does", "not", "come"});
    CHECK(neg.core.text == "does not come");
}

TEST_CASE("negating an auxiliary chain slots not after the head") {
    VerbPhrase vp = verb(
        "<pers>second</pers><numb>sing</numb><voice>active</voice>"
        "<tense>future</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>will</word><word>come</word>");
    VerbPhrase neg = negate_verb_phrase(vp);
    CHECK(neg.verb_words == std::vector<std::string>{"will", "not", "come"});
}

TEST_CASE("negation adds exactly one negative token") {
    for (const char* tense : {"present", "past", "future"}) {
        std::string inner =
            "<pers>third</pers><numb>sing</numb><voice>active</voice><tense>" +
            std::string(tense) +
            "</tense><kernel_tense>base</kernel_tense>"
            "<verb_type>intransitive</verb_type>";
        if (std::string(tense) == "future") inner += "<word>will</word>";
        inner += "<word>come</word>";
        VerbPhrase vp = verb(inner);
        VerbPhrase neg = negate_verb_phrase(vp);
        CHECK(test::oracle_count_negations(neg.core.text) ==
              test::oracle_count_negations(vp.core.text) + 1);
    }
}
