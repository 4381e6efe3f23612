#include "nlom/grammar.hpp"

namespace nlom {

std::string_view to_string(Mood m) {
    switch (m) {
    case Mood::Statement: return "statement";
    case Mood::Question: return "question";
    case Mood::Order: return "order";
    case Mood::FullExclamation: return "full exclamation";
    case Mood::Np: return "np";
    case Mood::Adj: return "adj";
    case Mood::Circumstances: return "circumstances";
    case Mood::Subcircum: return "subcircum";
    case Mood::About: return "about";
    case Mood::WhatTerseExclamation: return "what terse exclamation";
    case Mood::HowTerseExclamation: return "how terse exclamation";
    }
    return "?";
}

std::string_view to_string(Person p) {
    switch (p) {
    case Person::First: return "first";
    case Person::Second: return "second";
    case Person::Third: return "third";
    }
    return "?";
}

std::string_view to_string(GramNumber n) {
    return n == GramNumber::Sing ? "sing" : "plur";
}

std::string_view to_string(Case c) {
    return c == Case::Nom ? "nom" : "acc";
}

std::string_view to_string(Sex s) {
    switch (s) {
    case Sex::Masc: return "masc";
    case Sex::Fem: return "fem";
    case Sex::Neut: return "neut";
    case Sex::Unknown: return "unknown";
    }
    return "?";
}

std::string_view to_string(Grad g) {
    switch (g) {
    case Grad::Abso: return "abso";
    case Grad::Comp: return "comp";
    case Grad::Supl: return "supl";
    }
    return "?";
}

std::string_view to_string(Voice v) {
    return v == Voice::Active ? "active" : "passive";
}

std::string_view to_string(PositionSlot p) {
    switch (p) {
    case PositionSlot::Pre: return "pre";
    case PositionSlot::Mid: return "mid";
    case PositionSlot::Post: return "post";
    }
    return "?";
}

std::string_view to_string(CircAttribute a) {
    switch (a) {
    case CircAttribute::Place: return "place";
    case CircAttribute::Time: return "time";
    case CircAttribute::Way: return "way";
    case CircAttribute::Other: return "other";
    }
    return "?";
}

std::string_view to_string(Connector c) {
    switch (c) {
    case Connector::And: return "and";
    case Connector::Or: return "or";
    case Connector::NeitherNor: return "neither_nor";
    }
    return "?";
}

std::string_view to_string(Coordinator c) {
    return c == Coordinator::And ? "and" : "or";
}

std::string_view to_string(CompConnector c) {
    switch (c) {
    case CompConnector::AsAs: return "as_as";
    case CompConnector::Than: return "than";
    case CompConnector::TooTo: return "too_to";
    case CompConnector::EnoughTo: return "enough_to";
    case CompConnector::SoThat: return "so_that";
    }
    return "?";
}

std::string_view to_string(Relation r) {
    return r == Relation::Independent ? "independent" : "single_choice";
}

std::optional<Mood> mood_from_string(std::string_view s) {
    if (s == "statement") return Mood::Statement;
    if (s == "question") return Mood::Question;
    if (s == "order") return Mood::Order;
    if (s == "full exclamation") return Mood::FullExclamation;
    if (s == "np") return Mood::Np;
    if (s == "adj") return Mood::Adj;
    if (s == "circumstances") return Mood::Circumstances;
    if (s == "subcircum") return Mood::Subcircum;
    if (s == "about") return Mood::About;
    if (s == "what terse exclamation") return Mood::WhatTerseExclamation;
    if (s == "how terse exclamation") return Mood::HowTerseExclamation;
    return std::nullopt;
}

std::optional<Person> person_from_string(std::string_view s) {
    if (s == "first") return Person::First;
    if (s == "second") return Person::Second;
    if (s == "third") return Person::Third;
    return std::nullopt;
}

std::optional<GramNumber> number_from_string(std::string_view s) {
    if (s == "sing") return GramNumber::Sing;
    if (s == "plur") return GramNumber::Plur;
    return std::nullopt;
}

std::optional<Case> case_from_string(std::string_view s) {
    if (s == "nom") return Case::Nom;
    if (s == "acc") return Case::Acc;
    return std::nullopt;
}

std::optional<Sex> sex_from_string(std::string_view s) {
    if (s == "masc") return Sex::Masc;
    if (s == "fem") return Sex::Fem;
    if (s == "neut") return Sex::Neut;
    return std::nullopt;
}

std::optional<Grad> grad_from_string(std::string_view s) {
    if (s == "abso") return Grad::Abso;
    if (s == "comp") return Grad::Comp;
    if (s == "supl") return Grad::Supl;
    return std::nullopt;
}

std::optional<Voice> voice_from_string(std::string_view s) {
    if (s == "active") return Voice::Active;
    if (s == "passive") return Voice::Passive;
    return std::nullopt;
}

std::optional<PositionSlot> position_from_string(std::string_view s) {
    if (s == "pre") return PositionSlot::Pre;
    if (s == "mid") return PositionSlot::Mid;
    if (s == "post") return PositionSlot::Post;
    return std::nullopt;
}

std::optional<CircAttribute> attribute_from_string(std::string_view s) {
    if (s == "place") return CircAttribute::Place;
    if (s == "time") return CircAttribute::Time;
    if (s == "way") return CircAttribute::Way;
    if (s == "other") return CircAttribute::Other;
    return std::nullopt;
}

std::optional<Connector> connector_from_string(std::string_view s) {
    if (s == "and") return Connector::And;
    if (s == "or") return Connector::Or;
    if (s == "neither_nor") return Connector::NeitherNor;
    return std::nullopt;
}

std::optional<Coordinator> coordinator_from_string(std::string_view s) {
    if (s == "and") return Coordinator::And;
    if (s == "or") return Coordinator::Or;
    return std::nullopt;
}

std::optional<CompConnector> comp_connector_from_string(std::string_view s) {
    if (s == "as_as") return CompConnector::AsAs;
    if (s == "than") return CompConnector::Than;
    if (s == "too_to") return CompConnector::TooTo;
    if (s == "enough_to") return CompConnector::EnoughTo;
    if (s == "so_that") return CompConnector::SoThat;
    return std::nullopt;
}

} // namespace nlom
