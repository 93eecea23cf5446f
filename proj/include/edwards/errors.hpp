#pragma once

#include <stdexcept>
#include <string>

namespace edwards {

struct EdwardsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MixedFields : EdwardsError {
    MixedFields(const std::string& what) : EdwardsError(what) {}
};

struct DivisionByZero : EdwardsError {
    DivisionByZero(const std::string& what) : EdwardsError(what) {}
};

struct NotASquare : EdwardsError {
    NotASquare(const std::string& what) : EdwardsError(what) {}
};

struct ContextMismatch : EdwardsError {
    ContextMismatch(const std::string& what) : EdwardsError(what) {}
};

struct UnknownVariable : EdwardsError {
    UnknownVariable(const std::string& what) : EdwardsError(what) {}
};

struct MissingAssignment : EdwardsError {
    MissingAssignment(const std::string& what) : EdwardsError(what) {}
};

struct ModeMismatch : EdwardsError {
    ModeMismatch(const std::string& what) : EdwardsError(what) {}
};

struct BadSlot : EdwardsError {
    BadSlot(const std::string& what) : EdwardsError(what) {}
};

struct ReductionFailed : EdwardsError {
    std::string identity;
    std::string remainder;
    ReductionFailed(const std::string& id, const std::string& rem)
        : EdwardsError("reduction failed for '" + id + "', remainder: " + rem),
          identity(id), remainder(rem) {}
};

struct NotSummable : EdwardsError {
    NotSummable(const std::string& what) : EdwardsError(what) {}
};

struct NotOnCurve : EdwardsError {
    NotOnCurve(const std::string& what) : EdwardsError(what) {}
};

struct TauOffDomain : EdwardsError {
    TauOffDomain(const std::string& what) : EdwardsError(what) {}
};

struct NoRuleApplies : EdwardsError {
    NoRuleApplies(const std::string& what) : EdwardsError(what) {}
};

struct Ambiguous : EdwardsError {
    Ambiguous(const std::string& what) : EdwardsError(what) {}
};

struct HypothesisViolated : EdwardsError {
    HypothesisViolated(const std::string& what) : EdwardsError(what) {}
};

struct ParseError : EdwardsError {
    ParseError(const std::string& what) : EdwardsError(what) {}
};

} // namespace edwards
