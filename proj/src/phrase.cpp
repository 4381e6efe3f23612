#include "nlom/phrase.hpp"

#include <algorithm>

#include "nlom/errors.hpp"
#include "nlom/morphology.hpp"

namespace nlom {

namespace {

std::string join(const std::vector<std::string>& words, const char* sep = " ") {
    std::string out;
    for (const auto& w : words) {
        if (w.empty()) continue;
        if (!out.empty()) out += sep;
        out += w;
    }
    return out;
}

// Kernels that make a noun part interrogative on their own.
bool is_query_kernel(std::string_view w) {
    return w == "who" || w == "whom" || w == "whose" || w == "what" || w == "which";
}

bool is_query_determiner(std::string_view w) {
    return w == "what" || w == "which" || w == "whose";
}

bool is_query_quantifier(std::string_view w) {
    return w == "how many" || w == "how much";
}

std::string part_joined(Connector c, const std::vector<NounPart>& parts) {
    std::vector<std::string> texts;
    for (const auto& p : parts) texts.push_back(p.text);
    switch (c) {
    case Connector::And: return join(texts, " and ");
    case Connector::Or: return join(texts, " or ");
    case Connector::NeitherNor: {
        std::string out = "neither " + texts.front();
        for (std::size_t i = 1; i < texts.size(); ++i) out += " nor " + texts[i];
        return out;
    }
    }
    return join(texts);
}

NounClauseRef parse_clause_ref(const MarkupNode& node) {
    NounClauseRef ref;
    ref.index = std::stoi(node.child_text("index"));
    ref.text = node.child_text("text");
    return ref;
}

} // namespace

const NounPhrase* Adverb::extent() const {
    return extent_np.empty() ? nullptr : &extent_np.front();
}

const PrepPhrase* PostModifier::prep_phrase() const {
    return prep.empty() ? nullptr : &prep.front();
}

Adverb parse_adverb(const MarkupNode& node, int parent_id) {
    Adverb adv;
    adv.core.nlml = serialize_markup(node);
    adv.core.parent = parent_id;
    adv.core.kernel = node.child_text("word");
    if (const MarkupNode* g = node.find("grad"))
        adv.grad = grad_from_string(g->text).value_or(Grad::Abso);
    if (const MarkupNode* t = node.find("type")) {
        adv.core.type = t->text;
        if (const MarkupNode* np = node.find("np"))
            adv.extent_np.push_back(parse_noun_phrase(*np, parent_id));
    }
    adv.core.text = adv.core.kernel;
    if (const NounPhrase* ext = adv.extent())
        adv.core.text += " " + ext->core.text;
    adv.core.description = "adverb \"" + adv.core.kernel + "\"";
    return adv;
}

Adjective parse_adjective(const MarkupNode& node, int parent_id) {
    Adjective adj;
    adj.core.nlml = serialize_markup(node);
    adj.core.parent = parent_id;
    adj.core.kernel = node.child_text("word");
    if (const MarkupNode* g = node.find("grad"))
        adj.grad = grad_from_string(g->text).value_or(Grad::Abso);
    std::vector<std::string> tokens;
    for (const auto& c : node.children)
        if (c.tag == "adv") {
            adj.advs.push_back(parse_adverb(c, parent_id));
            tokens.push_back(adj.advs.back().core.text);
        }
    tokens.push_back(adj.core.kernel);
    adj.core.text = join(tokens);
    adj.core.description = "adjective \"" + adj.core.kernel + "\" (" +
                           std::string(to_string(adj.grad)) + ")";
    return adj;
}

PrepPhrase parse_prep_phrase(const MarkupNode& node, int parent_id) {
    PrepPhrase pp;
    pp.core.nlml = serialize_markup(node);
    pp.core.parent = parent_id;
    pp.prep = node.child_text("prep");
    if (pp.prep.empty())
        throw schema_error("prep_phrase without a preposition");
    const MarkupNode* np = node.find("np");
    if (!np)
        throw schema_error("prep_phrase without an object");
    pp.object_np = parse_noun_phrase(*np, parent_id);
    pp.core.kernel = pp.prep;
    pp.core.text = pp.prep + " " + pp.object_np.core.text;
    if (!pp.object_np.core.query_text.empty())
        pp.core.query_text = pp.prep + " " + pp.object_np.core.query_text;
    pp.core.description = "prepositional phrase \"" + pp.core.text + "\"";
    return pp;
}

NounPhrase parse_noun_phrase(const MarkupNode& node, int parent_id) {
    NounPhrase np;
    np.core.nlml = serialize_markup(node);
    np.core.parent = parent_id;

    std::vector<Person> persons;
    std::vector<GramNumber> numbers;
    std::vector<Case> cases;
    std::vector<Sex> sexes;

    for (const auto& child : node.children) {
        if (child.tag == "part_connector") {
            np.part_connector = connector_from_string(child.text);
            continue;
        }
        if (child.tag != "noun") continue;

        NounPart part;
        std::vector<std::string> tokens;
        Person pers = Person::Third;
        GramNumber numb = GramNumber::Sing;
        Case case_ = Case::Nom;
        Sex sex = Sex::Unknown;
        for (const auto& c : child.children) {
            if (c.tag == "type") part.kernel_type = c.text;
            else if (c.tag == "word") {
                part.kernel = c.text;
                tokens.push_back(c.text);
            } else if (c.tag == "article" || c.tag == "determiner" ||
                       c.tag == "quantifier") {
                PreModifier pm;
                pm.kind = c.tag == "article" ? PreModifier::Kind::Article
                          : c.tag == "determiner" ? PreModifier::Kind::Determiner
                                                  : PreModifier::Kind::Quantifier;
                pm.word = c.text;
                part.pre_modifiers.push_back(pm);
                tokens.push_back(c.text);
            } else if (c.tag == "adj") {
                PreModifier pm;
                pm.kind = PreModifier::Kind::Adjective;
                pm.adjective.push_back(parse_adjective(c, parent_id));
                tokens.push_back(pm.adjective.front().core.text);
                part.pre_modifiers.push_back(std::move(pm));
            } else if (c.tag == "prep_phrase") {
                PostModifier pm;
                pm.kind = PostModifier::Kind::PrepPhrase;
                pm.prep.push_back(parse_prep_phrase(c, parent_id));
                tokens.push_back(pm.prep.front().core.text);
                part.post_modifiers.push_back(std::move(pm));
            } else if (c.tag == "relative_clause_ref") {
                PostModifier pm;
                pm.kind = PostModifier::Kind::RelativeClause;
                NounClauseRef ref = parse_clause_ref(c);
                pm.relative.index = ref.index;
                pm.relative.text = ref.text;
                // snapshot of the modified part before the clause attaches
                pm.relative.modified_np_text = join(tokens);
                tokens.push_back(ref.text);
                part.post_modifiers.push_back(std::move(pm));
            } else if (c.tag == "noun_clause_ref") {
                part.clause = parse_clause_ref(c);
                tokens.push_back(part.clause->text);
            } else if (c.tag == "pers") {
                pers = person_from_string(c.text).value_or(Person::Third);
            } else if (c.tag == "numb") {
                numb = number_from_string(c.text).value_or(GramNumber::Sing);
            } else if (c.tag == "case") {
                case_ = case_from_string(c.text).value_or(Case::Nom);
            } else if (c.tag == "sex") {
                sex = sex_from_string(c.text).value_or(Sex::Unknown);
            }
        }
        if (part.kernel.empty() && part.kernel_type != "noun_clause")
            throw schema_error("noun part without a kernel word");
        part.text = join(tokens);
        if (is_query_kernel(part.kernel))
            part.query_text = part.text;
        for (const auto& pm : part.pre_modifiers) {
            if (pm.kind == PreModifier::Kind::Determiner && is_query_determiner(pm.word))
                part.query_text = part.text;
            if (pm.kind == PreModifier::Kind::Quantifier && is_query_quantifier(pm.word))
                part.query_text = part.text;
        }
        part.personality = pers;
        part.number = numb;
        part.case_ = case_;
        part.sex = sex;
        persons.push_back(pers);
        numbers.push_back(numb);
        cases.push_back(case_);
        sexes.push_back(sex);
        np.parts.push_back(std::move(part));
    }

    if (np.parts.empty())
        throw schema_error("noun phrase without parts");
    if (np.parts.size() < 2)
        np.part_connector.reset();

    np.personality = *std::min_element(persons.begin(), persons.end());
    np.number = numbers.front();
    if (np.parts.size() >= 2 && np.part_connector == Connector::And)
        np.number = GramNumber::Plur;
    np.case_ = cases.front();
    np.sex = np.parts.size() == 1 ? sexes.front() : Sex::Unknown;

    np.core.kernel = np.parts.front().kernel;
    np.core.type = np.parts.front().kernel_type;
    np.core.text = np.part_connector
                       ? part_joined(*np.part_connector, np.parts)
                       : np.parts.front().text;
    for (const auto& part : np.parts)
        if (!part.query_text.empty()) {
            np.core.query_text = part.query_text;
            break;
        }
    np.core.description = "noun phrase \"" + np.core.text + "\" (" + np.core.type +
                          ", " + std::string(to_string(np.number)) + ", " +
                          std::string(to_string(np.personality)) + ")";
    return np;
}

PredicatePhrase parse_predicate(const MarkupNode& node, int parent_id) {
    PredicatePhrase pred;
    pred.core.nlml = serialize_markup(node);
    pred.core.parent = parent_id;
    pred.core.type = node.child_text("type");

    if (pred.core.type == "adjective") {
        pred.kind = PredicatePhrase::Kind::Adjective;
        const MarkupNode* adj = node.find("adj");
        if (!adj)
            throw schema_error("adjective predicate without <adj>");
        Adjective a = parse_adjective(*adj, parent_id);
        pred.core.kernel = a.core.kernel;
        pred.core.text = a.core.text;
        pred.payload = std::move(a);
        if (const MarkupNode* conn = node.find("connector")) {
            auto c = comp_connector_from_string(conn->text);
            const MarkupNode* np = node.find("np");
            if (!c || !np)
                throw schema_error("comparative predicate needs connector and np");
            PredicatePhrase::Comparative comp;
            comp.connector = *c;
            comp.complement = parse_noun_phrase(*np, parent_id);
            const std::string& adj_text = std::get<Adjective>(pred.payload).core.text;
            const std::string& np_text = comp.complement.core.text;
            switch (comp.connector) {
            case CompConnector::AsAs: pred.core.text = "as " + adj_text + " as " + np_text; break;
            case CompConnector::Than: pred.core.text = adj_text + " than " + np_text; break;
            case CompConnector::TooTo: pred.core.text = "too " + adj_text + " to " + np_text; break;
            case CompConnector::EnoughTo: pred.core.text = adj_text + " enough to " + np_text; break;
            case CompConnector::SoThat: pred.core.text = "so " + adj_text + " that " + np_text; break;
            }
            pred.comparative = std::move(comp);
        }
    } else if (pred.core.type == "noun_phrase") {
        pred.kind = PredicatePhrase::Kind::NounPhrase;
        const MarkupNode* np = node.find("np");
        if (!np)
            throw schema_error("noun_phrase predicate without <np>");
        NounPhrase n = parse_noun_phrase(*np, parent_id);
        pred.core.kernel = n.core.kernel;
        pred.core.text = n.core.text;
        pred.core.query_text = n.core.query_text;
        pred.payload = std::move(n);
    } else if (pred.core.type == "prep_phrase") {
        pred.kind = PredicatePhrase::Kind::PrepPhrase;
        const MarkupNode* pp = node.find("prep_phrase");
        if (!pp)
            throw schema_error("prep_phrase predicate without <prep_phrase>");
        PrepPhrase p = parse_prep_phrase(*pp, parent_id);
        pred.core.kernel = p.core.kernel;
        pred.core.text = p.core.text;
        pred.payload = std::move(p);
    } else {
        throw schema_error("unknown predicate type \"" + pred.core.type + "\"");
    }
    pred.core.description = "predicate (" + pred.core.type + ") \"" + pred.core.text + "\"";
    return pred;
}

Circumstance parse_circumstance(const MarkupNode& node, int parent_id) {
    Circumstance c;
    c.core.nlml = serialize_markup(node);
    c.core.parent = parent_id;
    c.core.type = node.child_text("type");
    if (const MarkupNode* p = node.find("position"))
        c.position = position_from_string(p->text).value_or(PositionSlot::Post);
    if (const MarkupNode* a = node.find("attribute"))
        c.attribute = attribute_from_string(a->text).value_or(CircAttribute::Other);
    c.query_adv = node.child_text("query_adv");

    if (c.core.type == "adverb") {
        c.kind = Circumstance::Kind::Adverb;
        const MarkupNode* adv = node.find("adv");
        if (!adv)
            throw schema_error("adverb circumstance without <adv>");
        Adverb a = parse_adverb(*adv, parent_id);
        c.core.kernel = a.core.kernel;
        c.core.text = a.core.text;
        c.payload = std::move(a);
    } else if (c.core.type == "prep_phrase") {
        c.kind = Circumstance::Kind::PrepPhrase;
        const MarkupNode* pp = node.find("prep_phrase");
        if (!pp)
            throw schema_error("prep_phrase circumstance without <prep_phrase>");
        PrepPhrase p = parse_prep_phrase(*pp, parent_id);
        c.core.kernel = p.core.kernel;
        c.core.text = p.core.text;
        c.core.query_text = p.core.query_text;
        c.payload = std::move(p);
    } else if (c.core.type == "clause") {
        c.kind = Circumstance::Kind::Clause;
        const MarkupNode* ref = node.find("noun_clause_ref");
        if (!ref)
            throw schema_error("clause circumstance without its clause");
        NounClauseRef r = parse_clause_ref(*ref);
        c.core.text = r.text;
        c.payload = std::move(r);
    } else {
        throw schema_error("unknown circumstance type \"" + c.core.type + "\"");
    }
    if (!c.query_adv.empty())
        c.core.query_text = c.query_adv;
    c.core.description = "circumstance (" + std::string(to_string(c.attribute)) +
                         ", " + std::string(to_string(c.position)) + ") \"" +
                         c.core.text + "\"";
    return c;
}

std::string circumstance_text(const Circumstance& c) { return c.core.text; }

VerbPhrase parse_verb_phrase(const MarkupNode& node, int parent_id) {
    VerbPhrase vp;
    vp.core.nlml = serialize_markup(node);
    vp.core.parent = parent_id;

    if (const MarkupNode* p = node.find("pers"))
        vp.personality = person_from_string(p->text).value_or(Person::Third);
    if (const MarkupNode* n = node.find("numb"))
        vp.number = number_from_string(n->text).value_or(GramNumber::Sing);
    if (const MarkupNode* v = node.find("voice"))
        vp.voice = voice_from_string(v->text).value_or(Voice::Active);
    if (const MarkupNode* t = node.find("tense"))
        vp.tense = t->text;
    if (const MarkupNode* k = node.find("kernel_tense"))
        vp.kernel_tense = k->text;
    vp.verb_type = node.child_text("verb_type");
    vp.core.type = vp.verb_type;
    if (const MarkupNode* n = node.find("neg"))
        vp.neg = n->text;

    for (const auto& c : node.children) {
        if (c.tag == "word") vp.verb_words.push_back(c.text);
        else if (c.tag == "direct_object")
            vp.direct_object = parse_noun_phrase(c, parent_id);
        else if (c.tag == "indirect_object")
            vp.indirect_object = parse_noun_phrase(c, parent_id);
        else if (c.tag == "predicate")
            vp.predicate = parse_predicate(c, parent_id);
        else if (c.tag == "noun_clause_ref")
            vp.clause_complement = parse_clause_ref(c);
    }
    if (vp.verb_words.empty())
        throw schema_error("verb phrase without verb words");
    if (vp.verb_type == "be" && !vp.predicate)
        throw ModelError(ModelErrorCode::MissingPredicateAdjective,
                         "be-verb phrase without a predicate");
    if (vp.verb_type == "ditransitive" && (!vp.direct_object || !vp.indirect_object))
        throw ModelError(ModelErrorCode::MissingObject,
                         "ditransitive verb phrase missing an object");

    // kernel: first word that is not an auxiliary or particle
    vp.core.kernel = vp.verb_words.back();
    for (const auto& w : vp.verb_words)
        if (!morph::is_aux_word(w) && w != "not" && w != "to") {
            vp.core.kernel = w;
            break;
        }

    vp.core.text = verb_phrase_surface(vp);
    vp.core.description = "verb phrase \"" + vp.core.kernel + "\" (" + vp.verb_type +
                          ", " + vp.tense + ")";
    return vp;
}

std::string verb_phrase_surface(const VerbPhrase& vp) {
    std::vector<std::string> words = vp.verb_words;
    if (vp.neg && std::find(words.begin(), words.end(), *vp.neg) == words.end()) {
        if (!words.empty() && morph::is_aux_word(words.front()) && words.size() > 1)
            words.insert(words.begin() + 1, *vp.neg);
        else
            words.insert(words.begin(), *vp.neg);
    }
    std::vector<std::string> tokens{join(words)};
    if (vp.indirect_object) tokens.push_back(vp.indirect_object->core.text);
    if (vp.direct_object) tokens.push_back(vp.direct_object->core.text);
    if (vp.predicate) tokens.push_back(vp.predicate->core.text);
    if (vp.clause_complement) tokens.push_back(vp.clause_complement->text);
    return join(tokens);
}

NounPhrase single_part_phrase(const NounPhrase& np, std::size_t part_index) {
    const NounPart& part = np.parts.at(part_index);
    NounPhrase out;
    out.core = np.core;
    out.core.text = part.text;
    out.core.kernel = part.kernel;
    out.core.type = part.kernel_type;
    out.core.query_text = part.query_text;
    out.personality = part.personality;
    out.number = part.number;
    out.case_ = part.case_;
    out.sex = part.sex;
    out.parts = {part};
    out.part_connector.reset();
    out.core.description = "noun phrase \"" + part.text + "\" (" + part.kernel_type +
                           ", " + std::string(to_string(part.number)) + ", " +
                           std::string(to_string(part.personality)) + ")";
    return out;
}

std::optional<std::string> get_query_text(const NounPhrase& np) {
    if (np.core.query_text.empty()) return std::nullopt;
    return np.core.query_text;
}

std::optional<std::string> get_query_text(const VerbPhrase& vp) {
    if (vp.direct_object && !vp.direct_object->core.query_text.empty())
        return vp.direct_object->core.query_text;
    if (vp.indirect_object && !vp.indirect_object->core.query_text.empty())
        return vp.indirect_object->core.query_text;
    if (vp.predicate && !vp.predicate->core.query_text.empty())
        return vp.predicate->core.query_text;
    return std::nullopt;
}

AuxSplit split_auxiliary(const VerbPhrase& vp) {
    return split_auxiliary(vp, vp.personality, vp.number);
}

AuxSplit split_auxiliary(const VerbPhrase& vp, Person p, GramNumber n) {
    const std::vector<std::string>& words = vp.verb_words;
    const std::string& w0 = words.front();
    bool past = vp.tense == "past" || w0 == "was" || w0 == "were" ||
                w0 == "did" || w0 == "had";
    std::string_view tense = past ? "past" : "present";

    AuxSplit out;
    bool aux_head = morph::is_modal(w0) || morph::is_be_form(w0) ||
                    ((morph::is_have_form(w0) || morph::is_do_form(w0)) &&
                     words.size() >= 2);
    if (aux_head) {
        // carry agreement onto the auxiliary itself
        if (morph::is_be_form(w0))
            out.aux = morph::be_form(tense, p, n);
        else if (morph::is_do_form(w0))
            out.aux = morph::do_aux(tense, p, n);
        else if (morph::is_have_form(w0))
            out.aux = past ? "had"
                           : (p == Person::Third && n == GramNumber::Sing ? "has"
                                                                          : "have");
        else
            out.aux = w0;
        out.remainder.assign(words.begin() + 1, words.end());
    } else {
        out.aux = morph::do_aux(tense, p, n);
        out.remainder.push_back(morph::base_form(w0));
        out.remainder.insert(out.remainder.end(), words.begin() + 1, words.end());
    }

    // Objects and predicate follow, except the query constituent the caller
    // will front.
    if (vp.indirect_object && vp.indirect_object->core.query_text.empty())
        out.remainder.push_back(vp.indirect_object->core.text);
    if (vp.direct_object && vp.direct_object->core.query_text.empty())
        out.remainder.push_back(vp.direct_object->core.text);
    if (vp.predicate && vp.predicate->core.query_text.empty())
        out.remainder.push_back(vp.predicate->core.text);
    if (vp.clause_complement)
        out.remainder.push_back(vp.clause_complement->text);
    return out;
}

} // namespace nlom
