#pragma once

#include <string>
#include <vector>

#include "nlom/sentence.hpp"

namespace nlom {

// Slot layout of one realized sentence: tokens are joined with single
// spaces, empties dropped, punctuation attached without a space.
struct RealizationPlan {
    std::vector<std::string> fronted;    // query word / opener / pre circs
    std::vector<std::string> core_slots; // aux, subject, verb words, objects
    std::vector<std::string> trailing;   // post circs
    int mid_insert = 0;                  // core_slots index for mid circs
    std::string punctuation;

    std::string join() const;
};

// pre -> fronted, post -> trailing, mid -> core_slots at mid_insert;
// document order kept within each slot.
RealizationPlan place_circumstances(const std::vector<Circumstance>& circs,
                                    RealizationPlan plan);

// Mood-dispatched surface text. Statement fronts a non-subject query
// constituent (clause-origin sentences); question applies subject-auxiliary
// inversion unless the subject itself is the query; order prepends neg;
// full exclamation routes to realize_exclamation. Moods that are bare
// phrases (np, adj, circumstances, about, terse exclamations) raise
// ModelError(UnrealizableMood).
std::string realize_basic(const BasicSentence& bs);

enum class Opener { What, How };

// what + object + subject + rest, or how + predicate adjective + subject +
// rest, with "!". Raises ModelError(MissingObject) /
// ModelError(MissingPredicateAdjective) when the opener's phrase is absent.
std::string realize_exclamation(const BasicSentence& bs, Opener opener);

// Insert "not" after an auxiliary head, or wrap the verb in do-support.
// Adds exactly one negation token; text is recomputed.
VerbPhrase negate_verb_phrase(const VerbPhrase& vp);

} // namespace nlom
