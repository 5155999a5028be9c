#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace minij {

/// Position of a syntactic element inside one source file. Lines and columns
/// are 1-based; columns count bytes within the line. Paths are relative and
/// use forward slashes.
struct SourceLocation {
    std::string file;
    int line = 1;
    int column = 1;

    auto operator<=>(const SourceLocation&) const = default;

    std::string str() const {
        return file + ":" + std::to_string(line) + ":" + std::to_string(column);
    }
};

// ---------------------------------------------------------------------------
// Errors. Hard failures are exceptions; analysis findings are Diagnostic
// values (see below) and are never thrown.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class LexError : public Error {
public:
    LexError(SourceLocation loc, const std::string& msg)
        : Error(loc.str() + ": " + msg), location(std::move(loc)) {}
    SourceLocation location;
};

class ParseError : public Error {
public:
    ParseError(SourceLocation loc, const std::string& msg, std::vector<std::string> expected = {})
        : Error(loc.str() + ": " + msg), location(std::move(loc)), expectedTokens(std::move(expected)) {}
    SourceLocation location;
    std::vector<std::string> expectedTokens;
};

/// Violations of ApiModel invariants: duplicate types/members, inheritance
/// cycles, unresolvable supertypes, abstract members in concrete classes.
class ModelError : public Error {
public:
    enum class Kind { DuplicateType, DuplicateMember, CycleError, ExternalSupertype, InvalidModel };

    ModelError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
    Kind kind;
};

class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& msg)
        : Error(field + ": " + msg), fieldPath(std::move(field)) {}
    std::string fieldPath;
};

class BadTemplate : public Error {
public:
    explicit BadTemplate(const std::string& msg) : Error(msg) {}
};

class PreconditionViolation : public Error {
public:
    explicit PreconditionViolation(const std::string& msg) : Error(msg) {}
};

class GenerationRetryExhausted : public Error {
public:
    explicit GenerationRetryExhausted(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Diagnostics
// ---------------------------------------------------------------------------

/// Closed list of diagnostic codes shared by the reference checker and the
/// client-resolution front end.
namespace diag {
inline constexpr const char* MissingSymbol = "MISSING_SYMBOL";
inline constexpr const char* CannotOverrideFinal = "CANNOT_OVERRIDE_FINAL";
inline constexpr const char* AbstractNotImplemented = "ABSTRACT_NOT_IMPLEMENTED";
inline constexpr const char* AssignToFinal = "ASSIGN_TO_FINAL";
inline constexpr const char* AccessViolation = "ACCESS_VIOLATION";
inline constexpr const char* StaticMismatch = "STATIC_MISMATCH";
inline constexpr const char* TypeMismatch = "TYPE_MISMATCH";
inline constexpr const char* CannotInstantiateAbstract = "CANNOT_INSTANTIATE_ABSTRACT";
inline constexpr const char* CannotExtendFinal = "CANNOT_EXTEND_FINAL";
inline constexpr const char* AmbiguousCall = "AMBIGUOUS_CALL";
inline constexpr const char* UnresolvedName = "UNRESOLVED_NAME";
inline constexpr const char* TypeUnknown = "TYPE_UNKNOWN";
}  // namespace diag

struct Diagnostic {
    SourceLocation location;
    std::string code;
    std::string message;

    auto sortKey() const {
        return std::tie(location.file, location.line, location.column, code, message);
    }
    bool operator<(const Diagnostic& o) const { return sortKey() < o.sortKey(); }
    bool operator==(const Diagnostic& o) const = default;

    std::string str() const { return location.str() + " " + code + " " + message; }
};

}  // namespace minij
