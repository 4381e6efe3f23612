#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace nlom {

// Communicative category of a sentence. The multi-word values ("full
// exclamation" etc.) are spelled exactly as they appear in NLML text.
enum class Mood {
    Statement,
    Question,
    Order,
    FullExclamation,
    Np,
    Adj,
    Circumstances,
    Subcircum,
    About,
    WhatTerseExclamation,
    HowTerseExclamation,
};

enum class Person { First, Second, Third };
enum class GramNumber { Sing, Plur };
enum class Case { Nom, Acc };
enum class Sex { Masc, Fem, Neut, Unknown };
enum class Grad { Abso, Comp, Supl };
enum class Voice { Active, Passive };

// Placement slot of a circumstance within the realized sentence.
enum class PositionSlot { Pre, Mid, Post };

// Semantic function of a circumstance.
enum class CircAttribute { Place, Time, Way, Other };

// Conjunction joining phrase parts or verb phrases.
enum class Connector { And, Or, NeitherNor };

// Conjunction joining coordinate sentences.
enum class Coordinator { And, Or };

// Connector tying a compared noun phrase to an adjective predicate
// ("as...as", "than", "too...to", "enough...to", "so...that").
enum class CompConnector { AsAs, Than, TooTo, EnoughTo, SoThat };

// Relation among the sentences produced by splitting a conjoined
// structure: facts that hold together vs. alternatives.
enum class Relation { Independent, SingleChoice };

std::string_view to_string(Mood m);
std::string_view to_string(Person p);
std::string_view to_string(GramNumber n);
std::string_view to_string(Case c);
std::string_view to_string(Sex s);
std::string_view to_string(Grad g);
std::string_view to_string(Voice v);
std::string_view to_string(PositionSlot p);
std::string_view to_string(CircAttribute a);
std::string_view to_string(Connector c);
std::string_view to_string(Coordinator c);
std::string_view to_string(CompConnector c);
std::string_view to_string(Relation r);

std::optional<Mood> mood_from_string(std::string_view s);
std::optional<Person> person_from_string(std::string_view s);
std::optional<GramNumber> number_from_string(std::string_view s);
std::optional<Case> case_from_string(std::string_view s);
std::optional<Sex> sex_from_string(std::string_view s);
std::optional<Grad> grad_from_string(std::string_view s);
std::optional<Voice> voice_from_string(std::string_view s);
std::optional<PositionSlot> position_from_string(std::string_view s);
std::optional<CircAttribute> attribute_from_string(std::string_view s);
std::optional<Connector> connector_from_string(std::string_view s);
std::optional<Coordinator> coordinator_from_string(std::string_view s);
std::optional<CompConnector> comp_connector_from_string(std::string_view s);

} // namespace nlom
