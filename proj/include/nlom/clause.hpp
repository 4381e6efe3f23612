#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nlom/sentence.hpp"

namespace nlom {

enum class ClauseType { That, Whether, WhetherOrNot, QueryClause, QueryTo, NormalTo };
enum class ClauseRole { Subject, Object, PrepObject };
enum class RelativeForm { Full, Terse };
enum class TerseKind { PresentParticiple, PastParticiple, PassiveInfinitive };

std::string_view to_string(ClauseType t);
std::string_view to_string(ClauseRole r);
std::string_view to_string(RelativeForm f);
std::string_view to_string(TerseKind k);
std::optional<ClauseType> clause_type_from_string(std::string_view s);

// An embedded clause acting as a noun phrase. base is the clause parsed as a
// simple sentence; base.core.text is the clause's surface form including the
// preceding word ("that he comes") or the infinitive marker ("to come
// today"). parent_id names the hosting simple sentence.
struct NounClause {
    SimpleSentence base;
    ClauseType clause_type = ClauseType::That;
    int parent_id = -1;
    int index = -1; // position within the host sentence's clause list
    ClauseRole grammatical_role = ClauseRole::Object;
    std::string implied_text;

    bool operator==(const NounClause&) const = default;
};

struct RelativeClause {
    SimpleSentence base;
    RelativeForm form = RelativeForm::Full;
    std::string relative_word = "which"; // full form only
    std::optional<TerseKind> terse_kind; // terse form only
    std::optional<NounPhrase> modified_noun_phrase;
    std::string implied_statement;

    bool operator==(const RelativeClause&) const = default;
};

// Parse a <noun_clause> subtree (clause body already placeholder-free below
// this level). The surface text is computed; the implied text is left for
// compute_implied_text once the host's phrases exist.
NounClause parse_noun_clause(const MarkupNode& node, int parent_id);

// Parse a <relative_clause> subtree. Full form iff it has a subject; the
// relative word defaults to "which" when no query word is found. Terse kind
// is decided by voice and tense.
RelativeClause parse_relative_clause(const MarkupNode& node, int parent_id);

// The standalone question or statement the clause implies. parent is the
// hosting simple sentence; query_to in object role borrows its subject,
// normal_to borrows the host verb's object and maps the host verb to a
// modal. Raises ModelError(MissingParent) when the rule needs a parent that
// is not there.
std::string compute_implied_text(const NounClause& nc,
                                 const SimpleSentence* parent);

// Attach the noun phrase the clause modifies and recompute the implied
// statement. Raises ModelError(AlreadySet) on a second call.
void set_modified_noun_phrase(RelativeClause& rc, const NounPhrase& np);

// Raises ModelError(MissingModifiedNP) before set_modified_noun_phrase.
std::string compute_implied_statement(const RelativeClause& rc);

} // namespace nlom
