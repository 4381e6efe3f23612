#include "doctest.h"

#include <fstream>
#include <functional>
#include <sstream>

#include "nlom/clause.hpp"
#include "nlom/errors.hpp"
#include "nlom/markup.hpp"
#include "nlom/sentence.hpp"

using namespace nlom;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing fixture: " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SimpleSentence parse_fixture(const std::string& name) {
    Sentence s = parse_sentence(slurp(std::string(NLOM_CORPUS_DIR) + "/" + name));
    REQUIRE(std::holds_alternative<SimpleSentence>(s));
    return std::get<SimpleSentence>(s);
}

MarkupNode fragment(const std::string& nlml, const char* tag) {
    MarkupNode root = parse_markup(nlml);
    const MarkupNode* n = root.find(tag);
    REQUIRE_MESSAGE(n, "fragment lacks <" << tag << ">");
    return *n;
}

ModelErrorCode thrown_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const ModelError& e) {
        return e.code();
    }
    FAIL("expected a ModelError");
    return ModelErrorCode::SchemaViolation;
}

} // namespace

TEST_CASE("that-clause keeps its lead word in text and implication") {
    SimpleSentence ss = parse_fixture("that_he_comes.nlml");
    REQUIRE(ss.noun_clauses.size() == 1);
    const NounClause& nc = ss.noun_clauses[0];
    CHECK(nc.clause_type == ClauseType::That);
    CHECK(nc.grammatical_role == ClauseRole::Object);
    CHECK(nc.base.core.text == "that he comes");
    CHECK(nc.implied_text == "that he comes");
    CHECK(ss.core.text == "I know that he comes");
}

TEST_CASE("whether_or_not wraps the clause statement") {
    SimpleSentence ss = parse_fixture("whether_rains.nlml");
    REQUIRE(ss.noun_clauses.size() == 1);
    const NounClause& nc = ss.noun_clauses[0];
    CHECK(nc.clause_type == ClauseType::WhetherOrNot);
    CHECK(nc.base.core.text == "whether it rains or not");
    CHECK(nc.implied_text == "whether it rains or not");
    CHECK(ss.core.text == "I wonder whether it rains or not");
}

TEST_CASE("query clause implies the standalone question") {
    SimpleSentence ss = parse_fixture("want_know_when.nlml");
    REQUIRE(ss.noun_clauses.size() == 1);
    const NounClause& nc = ss.noun_clauses[0];
    CHECK(nc.clause_type == ClauseType::QueryClause);
    CHECK(nc.base.core.text == "when you will come here");
    CHECK(nc.implied_text == "when will you come here?");
    CHECK(ss.core.text == "I want to know when you will come here");
}

TEST_CASE("subject query_to asks on behalf of a person") {
    SimpleSentence ss = parse_fixture("how_finish_work.nlml");
    REQUIRE(ss.noun_clauses.size() == 1);
    const NounClause& nc = ss.noun_clauses[0];
    CHECK(nc.clause_type == ClauseType::QueryTo);
    CHECK(nc.grammatical_role == ClauseRole::Subject);
    CHECK(nc.base.core.text == "how to finish the work");
    CHECK(nc.implied_text == "How does a person finish the work?");
    CHECK(ss.core.text == "how to finish the work is still under discussion");
}

TEST_CASE("object query_to borrows the host subject") {
    SimpleSentence ss = parse_fixture("dont_know_what.nlml");
    REQUIRE(ss.noun_clauses.size() == 1);
    const NounClause& nc = ss.noun_clauses[0];
    CHECK(nc.clause_type == ClauseType::QueryTo);
    CHECK(nc.grammatical_role == ClauseRole::Object);
    CHECK(nc.base.core.text == "what to do next");
    CHECK(nc.implied_text == "what do I do next?");
    CHECK(ss.core.text == "I do not know what to do next");
}

TEST_CASE("normal_to names the host object as the implied actor") {
    SimpleSentence ss = parse_fixture("want_him_to_come.nlml");
    REQUIRE(ss.noun_clauses.size() == 1);
    const NounClause& nc = ss.noun_clauses[0];
    CHECK(nc.clause_type == ClauseType::NormalTo);
    CHECK(nc.base.core.text == "to come");
    CHECK(nc.implied_text == "he will come");
    CHECK(ss.core.text == "I want him to come");
}

TEST_CASE("normal_to without a host object stays a mental state") {
    SimpleSentence ss = parse_fixture("agrees_to_come.nlml");
    REQUIRE(ss.noun_clauses.size() == 1);
    const NounClause& nc = ss.noun_clauses[0];
    CHECK(nc.clause_type == ClauseType::NormalTo);
    CHECK(nc.base.core.text == "to come today");
    CHECK(nc.implied_text == "to come today");
    CHECK(ss.core.text == "he agrees to come today");
}

TEST_CASE("full relative clause implies the restored statement") {
    SimpleSentence ss = parse_fixture("met_man.nlml");
    REQUIRE(ss.relative_clauses.size() == 1);
    const RelativeClause& rc = ss.relative_clauses[0];
    CHECK(rc.form == RelativeForm::Full);
    CHECK(rc.relative_word == "whom");
    CHECK(rc.base.core.text == "whom you met yesterday");
    REQUIRE(rc.modified_noun_phrase.has_value());
    CHECK(rc.modified_noun_phrase->core.text == "the man");
    CHECK(rc.implied_statement == "you met the man yesterday");
    REQUIRE(ss.subjects.size() == 1);
    CHECK(ss.subjects[0].core.text == "the man whom you met yesterday");
    CHECK(ss.core.text == "the man whom you met yesterday is our boss");
}

TEST_CASE("terse relative clauses pick their participle reading") {
    SimpleSentence running = parse_fixture("boy_running.nlml");
    REQUIRE(running.relative_clauses.size() == 1);
    CHECK(running.relative_clauses[0].form == RelativeForm::Terse);
    CHECK(running.relative_clauses[0].terse_kind == TerseKind::PresentParticiple);
    CHECK(running.core.text == "the boy running");
    CHECK(running.relative_clauses[0].implied_statement == "the boy is running");

    SimpleSentence written = parse_fixture("book_written.nlml");
    REQUIRE(written.relative_clauses.size() == 1);
    CHECK(written.relative_clauses[0].terse_kind == TerseKind::PastParticiple);
    CHECK(written.core.text == "the book written");
    CHECK(written.relative_clauses[0].implied_statement == "the book was written");

    SimpleSentence pending = parse_fixture("work_to_be_finished.nlml");
    REQUIRE(pending.relative_clauses.size() == 1);
    CHECK(pending.relative_clauses[0].terse_kind == TerseKind::PassiveInfinitive);
    CHECK(pending.core.text == "the work to be finished");
    CHECK(pending.relative_clauses[0].implied_statement ==
          "the work should be finished");
}

TEST_CASE("unknown clause type is rejected with its own code") {
    MarkupNode node = fragment(
        "<noun_clause><type>maybe</type><verb_phrase><voice>active</voice>"
        "<tense>present</tense><kernel_tense>base</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>come</word></verb_phrase>"
        "</noun_clause>",
        "noun_clause");
    CHECK(thrown_code([&] { parse_noun_clause(node, 0); }) ==
          ModelErrorCode::UnknownClauseType);
}

TEST_CASE("to-infinitive clauses cannot carry a subject") {
    MarkupNode node = fragment(
        "<noun_clause><type>normal_to</type>"
        "<subject><noun><type>perspronoun</type><word>he</word><numb>sing</numb>"
        "<pers>third</pers><case>nom</case></noun></subject>"
        "<verb_phrase><voice>active</voice><tense>present</tense>"
        "<kernel_tense>base</kernel_tense><verb_type>intransitive</verb_type>"
        "<word>come</word></verb_phrase></noun_clause>",
        "noun_clause");
    CHECK(thrown_code([&] { parse_noun_clause(node, 0); }) ==
          ModelErrorCode::SchemaViolation);
}

TEST_CASE("object query_to needs a host sentence with a subject") {
    MarkupNode node = fragment(
        "<noun_clause><type>query_to</type>"
        "<verb_phrase><voice>active</voice><tense>present</tense>"
        "<kernel_tense>base</kernel_tense><verb_type>transitive</verb_type>"
        "<word>do</word><direct_object><noun><type>pronoun</type>"
        "<word>what</word><numb>sing</numb><pers>third</pers><case>acc</case>"
        "</noun></direct_object></verb_phrase></noun_clause>",
        "noun_clause");
    NounClause nc = parse_noun_clause(node, 0);
    CHECK(nc.grammatical_role == ClauseRole::Object);
    CHECK(thrown_code([&] { compute_implied_text(nc, nullptr); }) ==
          ModelErrorCode::MissingParent);
}

TEST_CASE("relative clause wiring happens exactly once") {
    MarkupNode node = fragment(
        "<relative_clause><verb_phrase><voice>active</voice>"
        "<tense>present</tense><kernel_tense>ing</kernel_tense>"
        "<verb_type>intransitive</verb_type><word>running</word></verb_phrase>"
        "</relative_clause>",
        "relative_clause");
    RelativeClause rc = parse_relative_clause(node, 0);
    CHECK(thrown_code([&] { compute_implied_statement(rc); }) ==
          ModelErrorCode::MissingModifiedNP);

    NounPhrase np;
    np.core.text = "the boy";
    set_modified_noun_phrase(rc, np);
    CHECK(rc.implied_statement == "the boy is running");
    CHECK(thrown_code([&] { set_modified_noun_phrase(rc, np); }) ==
          ModelErrorCode::AlreadySet);
}
