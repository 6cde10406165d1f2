#pragma once

#include <stdexcept>
#include <string>

namespace vw {

/// Base class for all workbench errors. Subclasses identify the failure
/// category; the message carries the diagnostic.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Antisymmetry violation: the transitive closure of the generators
/// contains a nontrivial cycle.
class CycleError : public Error {
public:
    using Error::Error;
};

/// A size cap was exceeded (hyperspace base, chain level, term arity, ...).
class SizeError : public Error {
public:
    using Error::Error;
};

/// A variant was used on an unsupported base (classical on a non-discrete
/// poset) or an unknown variant name was parsed.
class VariantError : public Error {
public:
    using Error::Error;
};

/// Two coalgebras of different variants were combined.
class VariantMismatch : public Error {
public:
    using Error::Error;
};

/// A stated precondition failed (e.g. the retraction equations of a
/// coreflexive instance).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An input value violates structural laws (axiom failure, non-monotone
/// table, a map that is not a homomorphism).
class StructureError : public Error {
public:
    using Error::Error;
};

/// Term arities do not line up in a composition.
class ArityError : public Error {
public:
    using Error::Error;
};

/// The random instance generator exhausted its attempt budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

/// Malformed external input (JSON field missing, wrong type, bad index).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Invalid suite or command configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace vw
