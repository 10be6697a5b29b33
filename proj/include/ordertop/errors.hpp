#pragma once

#include <stdexcept>
#include <string>

namespace ordertop {

// Base class for all library errors. The CLI maps subclasses onto its
// exit-code contract, so new error kinds should subclass rather than
// throw std::runtime_error directly.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Poset construction / lookup.
struct CycleError : Error {
  std::string a, b;
  CycleError(std::string a_, std::string b_)
      : Error("antisymmetry violation: " + a_ + " <= " + b_ + " <= " + a_),
        a(std::move(a_)),
        b(std::move(b_)) {}
};
struct DuplicateLabelError : Error {
  explicit DuplicateLabelError(const std::string& l) : Error("duplicate label: " + l) {}
};
struct UnknownLabelError : Error {
  explicit UnknownLabelError(const std::string& l) : Error("unknown label: " + l) {}
};

// Topology.
struct NotT0Error : Error {
  NotT0Error(const std::string& x, const std::string& y)
      : Error("not T0: points " + x + " and " + y + " share all opens") {}
};
struct CarrierMismatchError : Error {
  explicit CarrierMismatchError(const std::string& msg) : Error("carrier mismatch: " + msg) {}
};
struct NotALatticeError : Error {
  explicit NotALatticeError(const std::string& msg) : Error("not a lattice: " + msg) {}
};
struct CapExceededError : Error {
  explicit CapExceededError(const std::string& msg) : Error("open-set cap exceeded: " + msg) {}
};

// Codec and countable-poset oracles.
struct CodecError : Error {
  explicit CodecError(const std::string& msg) : Error("codec: " + msg) {}
};
struct BoundsError : Error {
  explicit BoundsError(const std::string& msg) : Error("bounds: " + msg) {}
};
struct BoundTooSmallError : Error {
  explicit BoundTooSmallError(const std::string& msg) : Error("bound too small: " + msg) {}
};
struct DegenerateFamilyError : Error {
  explicit DegenerateFamilyError(const std::string& msg) : Error("degenerate family: " + msg) {}
};
struct InvalidXRepError : Error {
  explicit InvalidXRepError(const std::string& msg) : Error("invalid X representative: " + msg) {}
};
struct FamilyNotInAError : Error {
  explicit FamilyNotInAError(const std::string& msg) : Error("family leaves A: " + msg) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error("precondition: " + msg) {}
};

// Text formats (poset files, element grammar).
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse: " + msg) {}
};

}  // namespace ordertop
