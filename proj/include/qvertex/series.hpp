#pragma once

#include "qvertex/qratio.hpp"
#include "qvertex/ratfunc.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qv {

/// Per-group total-degree caps. Two series are comparable only when their
/// caps agree.
class Caps {
public:
    Caps() = default;
    Caps(std::initializer_list<std::pair<Group, int>> caps);

    std::optional<int> cap(Group g) const;
    bool is_capped(Group g) const { return cap(g).has_value(); }
    bool admits(const Monomial& m) const;
    bool operator==(const Caps& o) const { return caps_ == o.caps_; }
    bool operator!=(const Caps& o) const { return !(caps_ == o.caps_); }
    const std::vector<std::pair<Group, int>>& entries() const { return caps_; }
    Caps relaxed_by(const std::vector<std::pair<Group, int>>& extra) const;

    std::string text() const;

private:
    std::vector<std::pair<Group, int>> caps_; // sorted by group
};

/// Truncated multivariate series: monomials in the capped-group variables
/// with exact RatFunc coefficients in everything else. All arithmetic
/// re-truncates against the caps.
class TruncatedSeries {
public:
    explicit TruncatedSeries(Caps caps) : caps_(std::move(caps)) {}
    static TruncatedSeries one(const Caps& caps);

    const Caps& caps() const { return caps_; }
    const std::map<Monomial, RatFunc>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    /// Add coeff * m; the capped-group part of m becomes the key, the rest is
    /// folded into the coefficient. Terms beyond the caps are dropped.
    void add_term(const Monomial& m, RatFunc coeff);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries& operator*=(const TruncatedSeries& o);

    void mul_coeff(const RatFunc& c);
    void mul_term(const Monomial& m, const RatFunc& c); // shifts keys

    /// Homomorphic substitution of variables by coeff*monomial, re-truncated
    /// against new_caps. Throws CapViolation when an image monomial has
    /// negative degree in a group capped by new_caps.
    TruncatedSeries substituted(const SubstMap& rules, const Caps& new_caps) const;

    TruncatedSeries truncated(const Caps& caps) const;

    /// Multiplicative inverse; requires constant term 1.
    TruncatedSeries inverted() const;

    RatFunc coefficient(const Monomial& key) const;

    struct Mismatch {
        Monomial key;
        RatFunc left, right;
    };
    std::vector<Mismatch> mismatches(const TruncatedSeries& o) const;
    bool equals(const TruncatedSeries& o) const { return mismatches(o).empty(); }

    /// Negative exponents in capped groups are tolerated internally (Laurent
    /// re-expansion); this checks none survived.
    bool has_negative_capped_exponents() const;

    std::string text() const;

private:
    Caps caps_;
    std::map<Monomial, RatFunc> t_;
};

/// Truncated expansion of a rational function around the origin of the
/// expand-group variables. Denominator factors must be binomials (1 - c*m);
/// a factor with zero net degree in every capped group but involving capped
/// variables throws NonExpandablePole.
TruncatedSeries series_expand(const RatFunc& f, Group expand_group, const Caps& caps);
TruncatedSeries series_expand(const QRatio& f, Group expand_group, const Caps& caps);

/// phi(x)^mult for x = c*m as an exact truncated series (Euler expansion),
/// where phi(x) = prod_{i>=0} (1 - x q^i). Throws NonTruncating when x has
/// no positive degree in any capped group.
TruncatedSeries phi_truncated(const Scalar& c, const Monomial& m, const Caps& caps, int mult = 1);

} // namespace qv
