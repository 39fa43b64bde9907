#pragma once

#include <stdexcept>
#include <string>

namespace qloz {

/// A formal q-product had a negative cyclotomic exponent or q-power where a
/// polynomial was required.
struct NotPolynomialError : std::runtime_error {
    explicit NotPolynomialError(const std::string& what) : std::runtime_error(what) {}
};

/// The profile DP window for a region exceeds the bitmask capacity.
struct FrontierTooWideError : std::runtime_error {
    explicit FrontierTooWideError(const std::string& what) : std::runtime_error(what) {}
};

/// Region exceeds the cell bound of the naive enumerator.
struct RegionTooLargeError : std::runtime_error {
    explicit RegionTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

/// Plane-partition box exceeds the brute-force bound.
struct BoxTooLargeError : std::runtime_error {
    explicit BoxTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

/// Monomial division left a negative exponent behind.
struct DivisionFailureError : std::runtime_error {
    explicit DivisionFailureError(const std::string& what) : std::runtime_error(what) {}
};

/// Condensation cells do not sit in cyclic order on a common face.
struct InvalidPlacementError : std::runtime_error {
    explicit InvalidPlacementError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed spec or polynomial input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qloz
