#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlom {

// Lexical/structural failure while reading NLML text. Carries the byte
// offset of the offending character.
enum class MarkupErrorCode { UnbalancedTag, UnterminatedTag, IllegalTagName };

class MarkupError : public std::runtime_error {
public:
    MarkupError(MarkupErrorCode code, std::size_t offset, const std::string& message)
        : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
          code_(code), offset_(offset) {}

    MarkupErrorCode code() const { return code_; }
    std::size_t offset() const { return offset_; }

private:
    MarkupErrorCode code_;
    std::size_t offset_;
};

// Failures raised while building the object model from an already
// well-formed tag tree.
enum class ModelErrorCode {
    SchemaViolation,
    UnsupportedComplexity,
    UnknownClauseType,
    MissingParent,
    AlreadySet,
    MissingModifiedNP,
    EmptyVerbPhrases,
    UnrealizableMood,
    MissingObject,
    MissingPredicateAdjective,
};

class ModelError : public std::runtime_error {
public:
    ModelError(ModelErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ModelErrorCode code() const { return code_; }

private:
    ModelErrorCode code_;
};

inline ModelError schema_error(const std::string& message) {
    return ModelError(ModelErrorCode::SchemaViolation, message);
}

} // namespace nlom
