#include "nlom/json_io.hpp"

#include <optional>
#include <string>

#include "json.hpp"
#include "nlom/clause.hpp"
#include "nlom/errors.hpp"

using nlohmann::json;

namespace nlom {

namespace {

template <class Parse>
auto parse_enum(const json& j, Parse parse, const char* what) {
    const std::string s = j.get<std::string>();
    auto v = parse(s);
    if (!v)
        throw schema_error("bad " + std::string(what) + " \"" + s +
                           "\" in model dump");
    return *v;
}

template <class T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <class T>
void get_opt(const json& j, const char* key, std::optional<T>& v) {
    auto it = j.find(key);
    if (it != j.end() && !it->is_null())
        v = it->get<T>();
    else
        v.reset();
}

// NLML documents never spell the unmarked sex, but dumps do.
std::optional<Sex> dump_sex_from_string(std::string_view s) {
    if (s == "unknown") return Sex::Unknown;
    return sex_from_string(s);
}

std::optional<Relation> relation_from_string(std::string_view s) {
    if (s == "independent") return Relation::Independent;
    if (s == "single_choice") return Relation::SingleChoice;
    return std::nullopt;
}

std::optional<ClauseRole> role_from_string(std::string_view s) {
    if (s == "subject") return ClauseRole::Subject;
    if (s == "object") return ClauseRole::Object;
    if (s == "prep_object") return ClauseRole::PrepObject;
    return std::nullopt;
}

std::optional<RelativeForm> form_from_string(std::string_view s) {
    if (s == "full") return RelativeForm::Full;
    if (s == "terse") return RelativeForm::Terse;
    return std::nullopt;
}

std::optional<TerseKind> terse_kind_from_string(std::string_view s) {
    if (s == "present_participle") return TerseKind::PresentParticiple;
    if (s == "past_participle") return TerseKind::PastParticiple;
    if (s == "passive_infinitive") return TerseKind::PassiveInfinitive;
    return std::nullopt;
}

} // namespace

// Serializers live in the model's namespace so the json library finds them
// by argument lookup. Grammar enums travel as their NLML spellings.

void to_json(json& j, const Mood& v) { j = std::string(to_string(v)); }
void from_json(const json& j, Mood& v) { v = parse_enum(j, mood_from_string, "mood"); }
void to_json(json& j, const Person& v) { j = std::string(to_string(v)); }
void from_json(const json& j, Person& v) { v = parse_enum(j, person_from_string, "person"); }
void to_json(json& j, const GramNumber& v) { j = std::string(to_string(v)); }
void from_json(const json& j, GramNumber& v) { v = parse_enum(j, number_from_string, "number"); }
void to_json(json& j, const Case& v) { j = std::string(to_string(v)); }
void from_json(const json& j, Case& v) { v = parse_enum(j, case_from_string, "case"); }
void to_json(json& j, const Sex& v) { j = std::string(to_string(v)); }
void from_json(const json& j, Sex& v) { v = parse_enum(j, dump_sex_from_string, "sex"); }
void to_json(json& j, const Grad& v) { j = std::string(to_string(v)); }
void from_json(const json& j, Grad& v) { v = parse_enum(j, grad_from_string, "grad"); }
void to_json(json& j, const Voice& v) { j = std::string(to_string(v)); }
void from_json(const json& j, Voice& v) { v = parse_enum(j, voice_from_string, "voice"); }
void to_json(json& j, const PositionSlot& v) { j = std::string(to_string(v)); }
void from_json(const json& j, PositionSlot& v) { v = parse_enum(j, position_from_string, "position"); }
void to_json(json& j, const CircAttribute& v) { j = std::string(to_string(v)); }
void from_json(const json& j, CircAttribute& v) { v = parse_enum(j, attribute_from_string, "attribute"); }
void to_json(json& j, const Connector& v) { j = std::string(to_string(v)); }
void from_json(const json& j, Connector& v) { v = parse_enum(j, connector_from_string, "connector"); }
void to_json(json& j, const Coordinator& v) { j = std::string(to_string(v)); }
void from_json(const json& j, Coordinator& v) { v = parse_enum(j, coordinator_from_string, "coordinator"); }
void to_json(json& j, const CompConnector& v) { j = std::string(to_string(v)); }
void from_json(const json& j, CompConnector& v) { v = parse_enum(j, comp_connector_from_string, "comp connector"); }
void to_json(json& j, const Relation& v) { j = std::string(to_string(v)); }
void from_json(const json& j, Relation& v) { v = parse_enum(j, relation_from_string, "relation"); }
void to_json(json& j, const ClauseType& v) { j = std::string(to_string(v)); }
void from_json(const json& j, ClauseType& v) { v = parse_enum(j, clause_type_from_string, "clause type"); }
void to_json(json& j, const ClauseRole& v) { j = std::string(to_string(v)); }
void from_json(const json& j, ClauseRole& v) { v = parse_enum(j, role_from_string, "clause role"); }
void to_json(json& j, const RelativeForm& v) { j = std::string(to_string(v)); }
void from_json(const json& j, RelativeForm& v) { v = parse_enum(j, form_from_string, "relative form"); }
void to_json(json& j, const TerseKind& v) { j = std::string(to_string(v)); }
void from_json(const json& j, TerseKind& v) { v = parse_enum(j, terse_kind_from_string, "terse kind"); }

void to_json(json& j, const NounPhrase& v);
void from_json(const json& j, NounPhrase& v);
void to_json(json& j, const PrepPhrase& v);
void from_json(const json& j, PrepPhrase& v);
void to_json(json& j, const SimpleSentence& v);
void from_json(const json& j, SimpleSentence& v);
void to_json(json& j, const NounClause& v);
void from_json(const json& j, NounClause& v);
void to_json(json& j, const RelativeClause& v);
void from_json(const json& j, RelativeClause& v);

void to_json(json& j, const PhraseCore& v) {
    j = json{{"nlml", v.nlml},
             {"text", v.text},
             {"description", v.description},
             {"type", v.type},
             {"kernel", v.kernel},
             {"query_text", v.query_text},
             {"parent", v.parent}};
}

void from_json(const json& j, PhraseCore& v) {
    j.at("nlml").get_to(v.nlml);
    j.at("text").get_to(v.text);
    j.at("description").get_to(v.description);
    j.at("type").get_to(v.type);
    j.at("kernel").get_to(v.kernel);
    j.at("query_text").get_to(v.query_text);
    j.at("parent").get_to(v.parent);
}

void to_json(json& j, const NounClauseRef& v) {
    j = json{{"index", v.index}, {"text", v.text}};
}

void from_json(const json& j, NounClauseRef& v) {
    j.at("index").get_to(v.index);
    j.at("text").get_to(v.text);
}

void to_json(json& j, const RelativeClauseRef& v) {
    j = json{{"index", v.index},
             {"text", v.text},
             {"modified_np_text", v.modified_np_text}};
}

void from_json(const json& j, RelativeClauseRef& v) {
    j.at("index").get_to(v.index);
    j.at("text").get_to(v.text);
    j.at("modified_np_text").get_to(v.modified_np_text);
}

void to_json(json& j, const Adverb& v) {
    j = json{{"core", v.core}, {"grad", v.grad}};
    if (!v.extent_np.empty()) j["extent"] = v.extent_np.front();
}

void from_json(const json& j, Adverb& v) {
    j.at("core").get_to(v.core);
    j.at("grad").get_to(v.grad);
    v.extent_np.clear();
    if (j.contains("extent"))
        v.extent_np.push_back(j.at("extent").get<NounPhrase>());
}

void to_json(json& j, const Adjective& v) {
    j = json{{"core", v.core}, {"grad", v.grad}, {"advs", v.advs}};
}

void from_json(const json& j, Adjective& v) {
    j.at("core").get_to(v.core);
    j.at("grad").get_to(v.grad);
    j.at("advs").get_to(v.advs);
}

namespace {

const char* pre_kind_name(PreModifier::Kind k) {
    switch (k) {
    case PreModifier::Kind::Adjective: return "adjective";
    case PreModifier::Kind::Article: return "article";
    case PreModifier::Kind::Determiner: return "determiner";
    case PreModifier::Kind::Quantifier: return "quantifier";
    }
    return "article";
}

PreModifier::Kind pre_kind_from(const json& j) {
    const std::string s = j.get<std::string>();
    if (s == "adjective") return PreModifier::Kind::Adjective;
    if (s == "article") return PreModifier::Kind::Article;
    if (s == "determiner") return PreModifier::Kind::Determiner;
    if (s == "quantifier") return PreModifier::Kind::Quantifier;
    throw schema_error("bad pre-modifier kind \"" + s + "\" in model dump");
}

} // namespace

void to_json(json& j, const PreModifier& v) {
    j = json{{"kind", pre_kind_name(v.kind)}};
    if (v.kind == PreModifier::Kind::Adjective)
        j["adjective"] = v.adjective.front();
    else
        j["word"] = v.word;
}

void from_json(const json& j, PreModifier& v) {
    v.kind = pre_kind_from(j.at("kind"));
    v.adjective.clear();
    v.word.clear();
    if (v.kind == PreModifier::Kind::Adjective)
        v.adjective.push_back(j.at("adjective").get<Adjective>());
    else
        j.at("word").get_to(v.word);
}

void to_json(json& j, const PostModifier& v) {
    if (v.kind == PostModifier::Kind::PrepPhrase)
        j = json{{"kind", "prep_phrase"}, {"prep_phrase", v.prep.front()}};
    else
        j = json{{"kind", "relative_clause"}, {"relative", v.relative}};
}

void from_json(const json& j, PostModifier& v) {
    const std::string kind = j.at("kind").get<std::string>();
    v.prep.clear();
    v.relative = {};
    if (kind == "prep_phrase") {
        v.kind = PostModifier::Kind::PrepPhrase;
        v.prep.push_back(j.at("prep_phrase").get<PrepPhrase>());
    } else if (kind == "relative_clause") {
        v.kind = PostModifier::Kind::RelativeClause;
        j.at("relative").get_to(v.relative);
    } else {
        throw schema_error("bad post-modifier kind \"" + kind +
                           "\" in model dump");
    }
}

void to_json(json& j, const NounPart& v) {
    j = json{{"kernel", v.kernel},
             {"kernel_type", v.kernel_type},
             {"pre_modifiers", v.pre_modifiers},
             {"post_modifiers", v.post_modifiers},
             {"text", v.text},
             {"query_text", v.query_text},
             {"personality", v.personality},
             {"number", v.number},
             {"case", v.case_},
             {"sex", v.sex}};
    if (v.clause) j["clause"] = *v.clause;
}

void from_json(const json& j, NounPart& v) {
    j.at("kernel").get_to(v.kernel);
    j.at("kernel_type").get_to(v.kernel_type);
    j.at("pre_modifiers").get_to(v.pre_modifiers);
    j.at("post_modifiers").get_to(v.post_modifiers);
    j.at("text").get_to(v.text);
    j.at("query_text").get_to(v.query_text);
    j.at("personality").get_to(v.personality);
    j.at("number").get_to(v.number);
    j.at("case").get_to(v.case_);
    j.at("sex").get_to(v.sex);
    get_opt(j, "clause", v.clause);
}

void to_json(json& j, const NounPhrase& v) {
    j = json{{"core", v.core},
             {"personality", v.personality},
             {"number", v.number},
             {"case", v.case_},
             {"sex", v.sex},
             {"parts", v.parts}};
    put_opt(j, "part_connector", v.part_connector);
}

void from_json(const json& j, NounPhrase& v) {
    j.at("core").get_to(v.core);
    j.at("personality").get_to(v.personality);
    j.at("number").get_to(v.number);
    j.at("case").get_to(v.case_);
    j.at("sex").get_to(v.sex);
    j.at("parts").get_to(v.parts);
    get_opt(j, "part_connector", v.part_connector);
}

void to_json(json& j, const PrepPhrase& v) {
    j = json{{"core", v.core}, {"prep", v.prep}, {"object_np", v.object_np}};
}

void from_json(const json& j, PrepPhrase& v) {
    j.at("core").get_to(v.core);
    j.at("prep").get_to(v.prep);
    j.at("object_np").get_to(v.object_np);
}

void to_json(json& j, const Circumstance& v) {
    j = json{{"core", v.core},
             {"position", v.position},
             {"attribute", v.attribute},
             {"query_adv", v.query_adv}};
    switch (v.kind) {
    case Circumstance::Kind::Adverb:
        j["kind"] = "adverb";
        j["adverb"] = std::get<Adverb>(v.payload);
        break;
    case Circumstance::Kind::PrepPhrase:
        j["kind"] = "prep_phrase";
        j["prep_phrase"] = std::get<PrepPhrase>(v.payload);
        break;
    case Circumstance::Kind::Clause:
        j["kind"] = "clause";
        j["clause"] = std::get<NounClauseRef>(v.payload);
        break;
    }
}

void from_json(const json& j, Circumstance& v) {
    j.at("core").get_to(v.core);
    j.at("position").get_to(v.position);
    j.at("attribute").get_to(v.attribute);
    j.at("query_adv").get_to(v.query_adv);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "adverb") {
        v.kind = Circumstance::Kind::Adverb;
        v.payload = j.at("adverb").get<Adverb>();
    } else if (kind == "prep_phrase") {
        v.kind = Circumstance::Kind::PrepPhrase;
        v.payload = j.at("prep_phrase").get<PrepPhrase>();
    } else if (kind == "clause") {
        v.kind = Circumstance::Kind::Clause;
        v.payload = j.at("clause").get<NounClauseRef>();
    } else {
        throw schema_error("bad circumstance kind \"" + kind +
                           "\" in model dump");
    }
}

void to_json(json& j, const PredicatePhrase& v) {
    j = json{{"core", v.core}};
    switch (v.kind) {
    case PredicatePhrase::Kind::Adjective:
        j["kind"] = "adjective";
        j["adjective"] = std::get<Adjective>(v.payload);
        break;
    case PredicatePhrase::Kind::NounPhrase:
        j["kind"] = "noun_phrase";
        j["noun_phrase"] = std::get<NounPhrase>(v.payload);
        break;
    case PredicatePhrase::Kind::PrepPhrase:
        j["kind"] = "prep_phrase";
        j["prep_phrase"] = std::get<PrepPhrase>(v.payload);
        break;
    }
    if (v.comparative)
        j["comparative"] = json{{"connector", v.comparative->connector},
                                {"complement", v.comparative->complement}};
}

void from_json(const json& j, PredicatePhrase& v) {
    j.at("core").get_to(v.core);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "adjective") {
        v.kind = PredicatePhrase::Kind::Adjective;
        v.payload = j.at("adjective").get<Adjective>();
    } else if (kind == "noun_phrase") {
        v.kind = PredicatePhrase::Kind::NounPhrase;
        v.payload = j.at("noun_phrase").get<NounPhrase>();
    } else if (kind == "prep_phrase") {
        v.kind = PredicatePhrase::Kind::PrepPhrase;
        v.payload = j.at("prep_phrase").get<PrepPhrase>();
    } else {
        throw schema_error("bad predicate kind \"" + kind + "\" in model dump");
    }
    v.comparative.reset();
    if (j.contains("comparative")) {
        PredicatePhrase::Comparative c;
        j.at("comparative").at("connector").get_to(c.connector);
        j.at("comparative").at("complement").get_to(c.complement);
        v.comparative = std::move(c);
    }
}

void to_json(json& j, const VerbPhrase& v) {
    j = json{{"core", v.core},
             {"personality", v.personality},
             {"number", v.number},
             {"voice", v.voice},
             {"tense", v.tense},
             {"kernel_tense", v.kernel_tense},
             {"verb_type", v.verb_type},
             {"verb_words", v.verb_words}};
    put_opt(j, "direct_object", v.direct_object);
    put_opt(j, "indirect_object", v.indirect_object);
    put_opt(j, "predicate", v.predicate);
    put_opt(j, "clause_complement", v.clause_complement);
    put_opt(j, "neg", v.neg);
}

void from_json(const json& j, VerbPhrase& v) {
    j.at("core").get_to(v.core);
    j.at("personality").get_to(v.personality);
    j.at("number").get_to(v.number);
    j.at("voice").get_to(v.voice);
    j.at("tense").get_to(v.tense);
    j.at("kernel_tense").get_to(v.kernel_tense);
    j.at("verb_type").get_to(v.verb_type);
    j.at("verb_words").get_to(v.verb_words);
    get_opt(j, "direct_object", v.direct_object);
    get_opt(j, "indirect_object", v.indirect_object);
    get_opt(j, "predicate", v.predicate);
    get_opt(j, "clause_complement", v.clause_complement);
    get_opt(j, "neg", v.neg);
}

void to_json(json& j, const SentenceCore& v) {
    j = json{{"mood", v.mood},
             {"text", v.text},
             {"nlml", v.nlml},
             {"description", v.description}};
    put_opt(j, "input", v.input);
}

void from_json(const json& j, SentenceCore& v) {
    j.at("mood").get_to(v.mood);
    j.at("text").get_to(v.text);
    j.at("nlml").get_to(v.nlml);
    j.at("description").get_to(v.description);
    get_opt(j, "input", v.input);
}

void to_json(json& j, const BasicSentence& v) {
    j = json{{"core", v.core},
             {"verb_phrase", v.verb_phrase},
             {"circumstances", v.circumstances}};
    put_opt(j, "subject", v.subject);
    put_opt(j, "neg", v.neg);
    put_opt(j, "query_adv", v.query_adv);
    put_opt(j, "subordinator", v.subordinator);
}

void from_json(const json& j, BasicSentence& v) {
    j.at("core").get_to(v.core);
    j.at("verb_phrase").get_to(v.verb_phrase);
    j.at("circumstances").get_to(v.circumstances);
    get_opt(j, "subject", v.subject);
    get_opt(j, "neg", v.neg);
    get_opt(j, "query_adv", v.query_adv);
    get_opt(j, "subordinator", v.subordinator);
}

void to_json(json& j, const BasicSentenceGrid& v) {
    j = json{{"rows", v.rows},
             {"cols", v.cols},
             {"cells", v.cells},
             {"relation", v.relation}};
}

void from_json(const json& j, BasicSentenceGrid& v) {
    j.at("rows").get_to(v.rows);
    j.at("cols").get_to(v.cols);
    j.at("cells").get_to(v.cells);
    j.at("relation").get_to(v.relation);
}

void to_json(json& j, const NounClause& v) {
    j = json{{"base", v.base},
             {"clause_type", v.clause_type},
             {"parent_id", v.parent_id},
             {"index", v.index},
             {"grammatical_role", v.grammatical_role},
             {"implied_text", v.implied_text}};
}

void from_json(const json& j, NounClause& v) {
    j.at("base").get_to(v.base);
    j.at("clause_type").get_to(v.clause_type);
    j.at("parent_id").get_to(v.parent_id);
    j.at("index").get_to(v.index);
    j.at("grammatical_role").get_to(v.grammatical_role);
    j.at("implied_text").get_to(v.implied_text);
}

void to_json(json& j, const RelativeClause& v) {
    j = json{{"base", v.base},
             {"form", v.form},
             {"relative_word", v.relative_word},
             {"implied_statement", v.implied_statement}};
    put_opt(j, "terse_kind", v.terse_kind);
    put_opt(j, "modified_noun_phrase", v.modified_noun_phrase);
}

void from_json(const json& j, RelativeClause& v) {
    j.at("base").get_to(v.base);
    j.at("form").get_to(v.form);
    j.at("relative_word").get_to(v.relative_word);
    j.at("implied_statement").get_to(v.implied_statement);
    get_opt(j, "terse_kind", v.terse_kind);
    get_opt(j, "modified_noun_phrase", v.modified_noun_phrase);
}

void to_json(json& j, const SimpleSentence& v) {
    j = json{{"core", v.core},
             {"id", v.id},
             {"subjects", v.subjects},
             {"verb_phrases", v.verb_phrases},
             {"circumstances", v.circumstances},
             {"noun_clauses", v.noun_clauses},
             {"relative_clauses", v.relative_clauses}};
    put_opt(j, "verb_connector", v.verb_connector);
    put_opt(j, "np", v.np);
    put_opt(j, "adj", v.adj);
    put_opt(j, "subordinator", v.subordinator);
    put_opt(j, "query_adv", v.query_adv);
    put_opt(j, "neg", v.neg);
    put_opt(j, "basic_sentences", v.basic_sentences);
}

void from_json(const json& j, SimpleSentence& v) {
    j.at("core").get_to(v.core);
    j.at("id").get_to(v.id);
    j.at("subjects").get_to(v.subjects);
    j.at("verb_phrases").get_to(v.verb_phrases);
    j.at("circumstances").get_to(v.circumstances);
    j.at("noun_clauses").get_to(v.noun_clauses);
    j.at("relative_clauses").get_to(v.relative_clauses);
    get_opt(j, "verb_connector", v.verb_connector);
    get_opt(j, "np", v.np);
    get_opt(j, "adj", v.adj);
    get_opt(j, "subordinator", v.subordinator);
    get_opt(j, "query_adv", v.query_adv);
    get_opt(j, "neg", v.neg);
    get_opt(j, "basic_sentences", v.basic_sentences);
}

void to_json(json& j, const ComplexSentence& v) {
    j = json{{"core", v.core},
             {"subordinator", v.subordinator},
             {"sub", v.sub},
             {"main", v.main}};
}

void from_json(const json& j, ComplexSentence& v) {
    j.at("core").get_to(v.core);
    j.at("subordinator").get_to(v.subordinator);
    j.at("sub").get_to(v.sub);
    j.at("main").get_to(v.main);
}

void to_json(json& j, const CompleteSentence& v) {
    j = json{{"main", v.main}};
    put_opt(j, "subordinator", v.subordinator);
    put_opt(j, "sub", v.sub);
}

void from_json(const json& j, CompleteSentence& v) {
    j.at("main").get_to(v.main);
    get_opt(j, "subordinator", v.subordinator);
    get_opt(j, "sub", v.sub);
}

void to_json(json& j, const AndOrSentence& v) {
    j = json{{"coordinator", v.coordinator},
             {"complete_sentences", v.complete_sentences}};
}

void from_json(const json& j, AndOrSentence& v) {
    j.at("coordinator").get_to(v.coordinator);
    j.at("complete_sentences").get_to(v.complete_sentences);
}

void to_json(json& j, const CompoundSentence& v) {
    j = json{{"core", v.core},
             {"coordinator", v.coordinator},
             {"complete_sentences", v.complete_sentences}};
}

void from_json(const json& j, CompoundSentence& v) {
    j.at("core").get_to(v.core);
    j.at("coordinator").get_to(v.coordinator);
    j.at("complete_sentences").get_to(v.complete_sentences);
}

void to_json(json& j, const CompoundComplexSentence& v) {
    j = json{{"core", v.core},
             {"subordinator", v.subordinator},
             {"sub", v.sub},
             {"main", v.main}};
}

void from_json(const json& j, CompoundComplexSentence& v) {
    j.at("core").get_to(v.core);
    j.at("subordinator").get_to(v.subordinator);
    j.at("sub").get_to(v.sub);
    j.at("main").get_to(v.main);
}

std::string dump_json(const Sentence& s, int indent) {
    json j;
    j["version"] = kDumpVersion;
    j["kind"] = std::string(sentence_kind(s));
    std::visit([&](const auto& v) { j["sentence"] = v; }, s);
    return j.dump(indent);
}

Sentence load_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw schema_error(std::string("model dump is not valid JSON: ") +
                           e.what());
    }
    try {
        if (!j.is_object() || j.value("version", std::string()) != kDumpVersion)
            throw schema_error("unsupported model dump version");
        const std::string kind = j.value("kind", std::string());
        const json& body = j.at("sentence");
        if (kind == "simple") return body.get<SimpleSentence>();
        if (kind == "complex") return body.get<ComplexSentence>();
        if (kind == "compound") return body.get<CompoundSentence>();
        if (kind == "compound_complex")
            return body.get<CompoundComplexSentence>();
        throw schema_error("bad sentence kind \"" + kind + "\" in model dump");
    } catch (const json::exception& e) {
        throw schema_error(std::string("malformed model dump: ") + e.what());
    }
}

} // namespace nlom
