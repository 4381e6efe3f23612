#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nlom/grammar.hpp"
#include "nlom/markup.hpp"
#include "nlom/phrase.hpp"

namespace nlom {

struct NounClause;     // completed in nlom/clause.hpp
struct RelativeClause; // completed in nlom/clause.hpp

// Attributes every sentence variant shares. "input" is what the user typed
// (when known); "text" is always recomputed from the model.
struct SentenceCore {
    Mood mood = Mood::Statement;
    std::optional<std::string> input;
    std::string text;
    std::string nlml;
    std::string description;

    bool operator==(const SentenceCore&) const = default;
};

// The terminal unit of decomposition: at most one subject and exactly one
// verb phrase. Not parsed from NLML; built by construct_basic_sentences.
struct BasicSentence {
    SentenceCore core;
    std::optional<NounPhrase> subject; // absent for order mood
    VerbPhrase verb_phrase;
    std::vector<Circumstance> circumstances;
    std::optional<std::string> neg;
    std::optional<std::string> query_adv;
    std::optional<std::string> subordinator; // subcircum mood

    bool operator==(const BasicSentence&) const = default;
};

struct BasicSentenceGrid {
    int rows = 0; // one per subject part (1 with absent subject)
    int cols = 0; // one per verb phrase
    std::vector<BasicSentence> cells; // row-major, rows*cols entries
    Relation relation = Relation::Independent;

    const BasicSentence& at(int row, int col) const;
    bool operator==(const BasicSentenceGrid&) const = default;
};

struct SimpleSentence {
    SentenceCore core;
    int id = 0; // phrase parent back-references and clause refs resolve here
    std::vector<NounPhrase> subjects;
    std::vector<VerbPhrase> verb_phrases;
    std::optional<Connector> verb_connector; // joins verb_phrase parts
    std::vector<Circumstance> circumstances;
    std::optional<NounPhrase> np;      // np / about / what-terse moods
    std::optional<Adjective> adj;      // adj / how-terse moods
    std::optional<std::string> subordinator; // subcircum mood
    std::vector<NounClause> noun_clauses;
    std::vector<RelativeClause> relative_clauses;
    std::optional<std::string> query_adv;
    std::optional<std::string> neg;
    std::optional<BasicSentenceGrid> basic_sentences;

    // Out of line: the clause vectors hold incomplete types here.
    SimpleSentence();
    SimpleSentence(const SimpleSentence&);
    SimpleSentence(SimpleSentence&&) noexcept;
    SimpleSentence& operator=(const SimpleSentence&);
    SimpleSentence& operator=(SimpleSentence&&) noexcept;
    ~SimpleSentence();
    bool operator==(const SimpleSentence&) const;
};

struct ComplexSentence {
    SentenceCore core;
    std::string subordinator; // never empty
    SimpleSentence sub;
    SimpleSentence main;

    bool operator==(const ComplexSentence&) const = default;
};

// Either a complex sentence (subordinator + sub present) or a plain simple
// sentence; the coordinate members of compound structures.
struct CompleteSentence {
    std::optional<std::string> subordinator;
    std::optional<SimpleSentence> sub;
    SimpleSentence main;

    std::string text() const;
    bool operator==(const CompleteSentence&) const = default;
};

struct AndOrSentence {
    Coordinator coordinator = Coordinator::And;
    std::vector<CompleteSentence> complete_sentences; // >= 2

    bool operator==(const AndOrSentence&) const = default;
};

struct CompoundSentence {
    SentenceCore core;
    Coordinator coordinator = Coordinator::And;
    std::vector<CompleteSentence> complete_sentences; // >= 2

    bool operator==(const CompoundSentence&) const = default;
};

struct CompoundComplexSentence {
    SentenceCore core;
    std::string subordinator; // never empty
    SimpleSentence sub;
    AndOrSentence main;

    bool operator==(const CompoundComplexSentence&) const = default;
};

using Sentence =
    std::variant<SimpleSentence, ComplexSentence, CompoundSentence,
                 CompoundComplexSentence>;

const SentenceCore& core_of(const Sentence& s);
// "simple", "complex", "compound", "compound_complex"
std::string_view sentence_kind(const Sentence& s);

struct DecompositionResult {
    std::vector<std::variant<ComplexSentence, SimpleSentence>> sentences;
    Relation relation = Relation::Independent;
};

// --- construction --------------------------------------------------------

// Dispatches on the <complexity> tag. The document should already pass
// validate_schema; structural gaps the validator cannot rule out raise
// ModelError(SchemaViolation), an unknown complexity value raises
// ModelError(UnsupportedComplexity).
Sentence parse_sentence(const std::string& nlml,
                        std::optional<std::string> input = std::nullopt);
Sentence parse_sentence(const MarkupNode& root,
                        std::optional<std::string> input = std::nullopt);

// Replace every noun_clause / relative_clause subtree (innermost first) with
// a noun_clause_ref / relative_clause_ref placeholder carrying the clause's
// index in ss and its surface text, parsing the clauses into ss's arrays.
// Returns the rewritten tree.
MarkupNode preprocess_clauses(const MarkupNode& node, SimpleSentence& ss);

// Fill the phrase fields of ss from a clause-free simple-sentence body
// according to ss.core.mood. Does not build the grid or any text.
void parse_simple_body(const MarkupNode& body, SimpleSentence& ss);

// Split conjoined subjects/verb phrases into the S x V grid, re-inflecting
// each cell's verb to its row subject and applying the neither_nor negative
// operation. Recomputes ss.core.text and description from the cells and
// stores the grid on ss as well as returning it.
BasicSentenceGrid construct_basic_sentences(SimpleSentence& ss);

// Split a conjoined structure into its independent (or single-choice)
// member sentences; simple and complex sentences decompose to themselves.
DecompositionResult decompose(const Sentence& s);

std::string complex_text(const std::string& subordinator,
                         const SimpleSentence& sub, const SimpleSentence& main);

} // namespace nlom
