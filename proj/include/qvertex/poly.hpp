#pragma once

#include "qvertex/monomial.hpp"
#include "qvertex/scalar.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qv {

/// Sparse multivariate Laurent polynomial over Scalar. Terms are kept sorted
/// ascending in the canonical (graded-lex) monomial order with no zero
/// coefficients, so equal polynomials have identical representations.
class LaurentPoly {
public:
    using Term = std::pair<Monomial, Scalar>;

    LaurentPoly() = default;

    static LaurentPoly from_scalar(const Scalar& c) {
        LaurentPoly p;
        if (c != 0) p.t_.emplace_back(Monomial{}, c);
        return p;
    }
    static LaurentPoly one() { return from_scalar(Scalar(1)); }
    static LaurentPoly term(const Scalar& c, const Monomial& m) {
        LaurentPoly p;
        if (c != 0) p.t_.emplace_back(m, c);
        return p;
    }
    static LaurentPoly variable(VarId v, int e = 1) { return term(Scalar(1), Monomial::var(v, e)); }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_[0].first.empty() && t_[0].second == 1; }
    bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_[0].first.empty()); }
    bool is_single_term() const { return t_.size() == 1; }
    size_t size() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    const Term& leading() const { return t_.back(); }   // largest monomial
    const Term& trailing() const { return t_.front(); } // smallest monomial

    Scalar coefficient(const Monomial& m) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return !(t_ == o.t_); }
    bool operator<(const LaurentPoly& o) const; // arbitrary total order for map keys

    LaurentPoly& mul_scalar(const Scalar& c);
    LaurentPoly& mul_monomial(const Monomial& m);
    LaurentPoly pow(unsigned n) const;

    LaurentPoly substituted(const SubstMap& rules) const;

    int degree(Group g) const;     // max group degree over terms (0 on zero poly)
    int min_degree(Group g) const; // min group degree over terms
    std::set<VarId> variables() const;

    /// Per-variable minimum exponent over all terms, as a monomial. Dividing
    /// by it turns a Laurent polynomial into a genuine polynomial touching
    /// exponent zero in every variable.
    Monomial monomial_content() const;

    std::string text() const;
    static LaurentPoly parse(const std::string& s);

private:
    std::vector<Term> t_; // sorted ascending by Monomial canonical order
    void compact();
    friend LaurentPoly poly_from_sorted(std::vector<Term>&& t);
};

/// Exact division attempt in the Laurent ring; nullopt when not divisible.
std::optional<LaurentPoly> div_exact(const LaurentPoly& p, const LaurentPoly& d);

} // namespace qv
