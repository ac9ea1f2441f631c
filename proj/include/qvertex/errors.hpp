#pragma once

#include <stdexcept>
#include <string>

namespace qv {

// A summand whose q-Pochhammer factor list has an uncancelled pole.
// Structurally this cannot happen while assembling the vertex sums, so
// seeing it means a formula was transcribed wrong somewhere upstream.
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// A denominator factor with zero net degree in the expansion group,
// e.g. 1/(r_1 - r_2); the series does not exist at the origin.
struct NonExpandablePole : std::runtime_error {
    explicit NonExpandablePole(const std::string& what) : std::runtime_error(what) {}
};

// An infinite phi-product whose factors never leave the truncation window.
struct NonTruncating : std::runtime_error {
    explicit NonTruncating(const std::string& what) : std::runtime_error(what) {}
};

struct CapViolation : std::runtime_error {
    explicit CapViolation(const std::string& what) : std::runtime_error(what) {}
};

struct LengthError : std::runtime_error {
    explicit LengthError(const std::string& what) : std::runtime_error(what) {}
};

struct CellOutOfRange : std::runtime_error {
    explicit CellOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qv
