#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nlom/grammar.hpp"
#include "nlom/markup.hpp"

namespace nlom {

// Attributes shared by every phrase class. The host sentence is carried as an
// id resolved through the owning document, keeping phrase values acyclic and
// freely copyable.
struct PhraseCore {
    std::string nlml;        // source fragment this phrase was parsed from
    std::string text;        // realized surface form
    std::string description; // compact human-readable summary
    std::string type;        // small category within the phrase class
    std::string kernel;      // kernel word
    std::string query_text;  // non-empty iff the phrase is a query constituent
    int parent = -1;         // id of the hosting simple sentence, -1 if detached

    bool operator==(const PhraseCore&) const = default;
};

struct NounPhrase;
struct PrepPhrase;

// Link to a clause parsed out of this subtree during preprocessing. The clause
// itself lives in the hosting SimpleSentence's clause arrays; the text is a
// snapshot so phrase surface forms never chase the reference.
struct NounClauseRef {
    int index = -1;
    std::string text;

    bool operator==(const NounClauseRef&) const = default;
};

struct RelativeClauseRef {
    int index = -1;
    std::string text;
    // Surface text of the modified part up to the clause ("the man"); wired
    // into the clause object by the sentence finalization pass.
    std::string modified_np_text;

    bool operator==(const RelativeClauseRef&) const = default;
};

struct Adverb {
    PhraseCore core;
    Grad grad = Grad::Abso;
    // 0 or 1 elements; vector because NounPhrase is incomplete here.
    std::vector<NounPhrase> extent_np;

    const NounPhrase* extent() const;
    bool operator==(const Adverb&) const = default;
};

struct Adjective {
    PhraseCore core;
    Grad grad = Grad::Abso;
    std::vector<Adverb> advs;

    bool operator==(const Adjective&) const = default;
};

struct PreModifier {
    enum class Kind { Adjective, Article, Determiner, Quantifier };
    Kind kind = Kind::Article;
    std::vector<Adjective> adjective; // payload when kind == Adjective
    std::string word;                 // payload otherwise

    bool operator==(const PreModifier&) const = default;
};

struct PostModifier {
    enum class Kind { PrepPhrase, RelativeClause };
    Kind kind = Kind::PrepPhrase;
    std::vector<PrepPhrase> prep; // 0 or 1; vector for the incomplete type
    RelativeClauseRef relative;   // payload when kind == RelativeClause

    const PrepPhrase* prep_phrase() const;
    bool operator==(const PostModifier&) const = default;
};

// One part of a (possibly conjoined) noun phrase: pre modifiers + kernel +
// post modifiers.
struct NounPart {
    std::string kernel;
    std::string kernel_type;
    std::vector<PreModifier> pre_modifiers;
    std::vector<PostModifier> post_modifiers;
    std::optional<NounClauseRef> clause; // kernel payload when type=noun_clause
    std::string text;
    std::string query_text; // non-empty iff this part is interrogative
    // Agreement of this part alone; the phrase aggregate may differ (a
    // conjoined phrase is plural even when every part is singular).
    Person personality = Person::Third;
    GramNumber number = GramNumber::Sing;
    Case case_ = Case::Nom;
    Sex sex = Sex::Unknown;

    bool operator==(const NounPart&) const = default;
};

struct NounPhrase {
    PhraseCore core;
    Person personality = Person::Third;
    GramNumber number = GramNumber::Sing;
    Case case_ = Case::Nom;
    Sex sex = Sex::Unknown;
    std::vector<NounPart> parts;
    std::optional<Connector> part_connector; // present iff |parts| >= 2

    bool operator==(const NounPhrase&) const = default;
};

struct PrepPhrase {
    PhraseCore core;
    std::string prep;
    NounPhrase object_np;

    bool operator==(const PrepPhrase&) const = default;
};

struct Circumstance {
    enum class Kind { Adverb, PrepPhrase, Clause };

    PhraseCore core;
    Kind kind = Kind::Adverb;
    PositionSlot position = PositionSlot::Post;
    CircAttribute attribute = CircAttribute::Other;
    std::variant<Adverb, PrepPhrase, NounClauseRef> payload;
    std::string query_adv; // non-empty iff interrogative (where/when/why/how)

    bool operator==(const Circumstance&) const = default;
};

struct PredicatePhrase {
    enum class Kind { Adjective, NounPhrase, PrepPhrase };

    struct Comparative {
        CompConnector connector = CompConnector::Than;
        nlom::NounPhrase complement;

        bool operator==(const Comparative&) const = default;
    };

    PhraseCore core;
    Kind kind = Kind::Adjective;
    std::variant<Adjective, nlom::NounPhrase, nlom::PrepPhrase> payload;
    std::optional<Comparative> comparative; // adjective predicates only

    bool operator==(const PredicatePhrase&) const = default;
};

struct VerbPhrase {
    PhraseCore core;
    Person personality = Person::Third;
    GramNumber number = GramNumber::Sing;
    Voice voice = Voice::Active;
    std::string tense = "present";
    std::string kernel_tense = "base";
    std::string verb_type;
    std::vector<std::string> verb_words;
    std::optional<NounPhrase> direct_object;
    std::optional<NounPhrase> indirect_object;
    std::optional<PredicatePhrase> predicate;
    std::optional<NounClauseRef> clause_complement; // mental_to complement
    std::optional<std::string> neg;

    bool operator==(const VerbPhrase&) const = default;
};

// --- parsing (nodes are schema-valid, clause subtrees already replaced by
// --- *_ref placeholders carrying index + text) ---------------------------

NounPhrase parse_noun_phrase(const MarkupNode& node, int parent_id);
VerbPhrase parse_verb_phrase(const MarkupNode& node, int parent_id);
PredicatePhrase parse_predicate(const MarkupNode& node, int parent_id);
PrepPhrase parse_prep_phrase(const MarkupNode& node, int parent_id);
Adjective parse_adjective(const MarkupNode& node, int parent_id);
Adverb parse_adverb(const MarkupNode& node, int parent_id);
Circumstance parse_circumstance(const MarkupNode& node, int parent_id);

// Interrogative content, if any: the phrase's own query text for noun
// phrases; the first query among direct object, indirect object, predicate
// for verb phrases.
std::optional<std::string> get_query_text(const NounPhrase& np);
std::optional<std::string> get_query_text(const VerbPhrase& vp);

// Surface text of the circumstance (payload text).
std::string circumstance_text(const Circumstance& c);

// Recompute the surface text from the phrase fields (verb words with the
// negation inserted, then objects, predicate, clause complement).
std::string verb_phrase_surface(const VerbPhrase& vp);

// Detach one part of a conjoined phrase as a standalone single-part phrase
// carrying that part's own agreement. Used when splitting a sentence into
// basic sentences.
NounPhrase single_part_phrase(const NounPhrase& np, std::size_t part_index);

struct AuxSplit {
    std::string aux;
    std::vector<std::string> remainder;

    bool operator==(const AuxSplit&) const = default;
};

// Splits a finite verb phrase into the fronted auxiliary and the rest, adding
// do-support when the first verb word cannot head an auxiliary chain. The
// remainder carries the object/predicate texts except the one serving as the
// query constituent (which the caller fronts). The second overload re-agrees
// the inserted auxiliary with an externally chosen subject.
AuxSplit split_auxiliary(const VerbPhrase& vp);
AuxSplit split_auxiliary(const VerbPhrase& vp, Person p, GramNumber n);

} // namespace nlom
