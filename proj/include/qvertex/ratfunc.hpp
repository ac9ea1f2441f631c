#pragma once

#include "qvertex/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qv {

/// Rational function kept as numerator polynomial over a multiset of
/// denominator factors. No multivariate GCD is attempted beyond monomial
/// content and factor-level cancellation; equality goes through
/// cross-multiplication. Denominator factors are canonicalized (monomial
/// content removed, trailing coefficient 1) so that factor lists coming
/// from the q-Pochhammer machinery merge and cancel exactly.
class RatFunc {
public:
    using Factors = std::vector<std::pair<LaurentPoly, int>>; // sorted, mult > 0

    RatFunc() = default; // zero
    explicit RatFunc(const Scalar& c) : num_(LaurentPoly::from_scalar(c)) {}
    explicit RatFunc(LaurentPoly p) : num_(std::move(p)) {}

    static RatFunc one() { return RatFunc(Scalar(1)); }
    static RatFunc fraction(const LaurentPoly& n, const LaurentPoly& d);
    static RatFunc from_parts(LaurentPoly num, Factors den); // den already canonical

    const LaurentPoly& num() const { return num_; }
    const Factors& den_factors() const { return den_; }
    LaurentPoly den_poly() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_.is_one(); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;

    RatFunc inverse() const;

    void mul_scalar(const Scalar& c) { num_.mul_scalar(c); }
    void mul_monomial(const Monomial& m) { num_.mul_monomial(m); }

    /// Cross-multiplication equality.
    friend bool ratfunc_equal(const RatFunc& a, const RatFunc& b);
    bool operator==(const RatFunc& o) const { return ratfunc_equal(*this, o); }

    RatFunc substituted(const SubstMap& rules) const;

    /// Cancel denominator factors that divide the numerator.
    void cancel_factors();
    /// cancel_factors plus a full GCD reduction when at most two variables
    /// are involved.
    void reduce();

    std::string text() const;

private:
    LaurentPoly num_;
    Factors den_;

    void push_den(const LaurentPoly& raw, int mult); // normalizes, adjusts num_
    void merge_den(const Factors& o, int sign);
};

} // namespace qv
