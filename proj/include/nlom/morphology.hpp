#pragma once

#include <string>
#include <string_view>

#include "nlom/grammar.hpp"

// English inflection helpers shared by realization and basic-sentence
// construction. Table-driven for the closed classes, suffix rules for open
// ones; unknown words pass through unchanged.
namespace nlom::morph {

bool is_modal(std::string_view w);
bool is_be_form(std::string_view w);
bool is_have_form(std::string_view w);
bool is_do_form(std::string_view w);
// Any finite word that can head an auxiliary chain (modal, be, have, do).
bool is_aux_word(std::string_view w);

// who/whom/whose/what/which/where/when/why/how
bool is_query_word(std::string_view w);

// come -> comes, watch -> watches, try -> tries, go -> goes, be -> is
std::string third_singular(std::string_view base);

// comes -> come, tries -> try, met -> meet, was -> be. Idempotent; words the
// rules cannot reduce come back unchanged.
std::string base_form(std::string_view word);

// Finite present form agreeing with the given subject features.
std::string present_form(std::string_view base, Person p, GramNumber n);

// Do-support auxiliary: do/does/did by tense ("past" vs anything else) and
// subject agreement.
std::string do_aux(std::string_view tense, Person p, GramNumber n);

// am/is/are/was/were by tense and subject agreement.
std::string be_form(std::string_view tense, Person p, GramNumber n);

// him -> he, me -> I, whom -> who; nominative forms stay themselves.
std::string nominative(std::string_view pronoun);

} // namespace nlom::morph
