#pragma once

#include "qvertex/partition.hpp"
#include "qvertex/ratfunc.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qv::mac {

/// <p_lambda, p_mu> = delta_{lambda,mu} prod_n n^{m_n} m_n!
///                    prod_i (1 - q^{lambda_i})/(1 - t^{lambda_i}).
RatFunc power_inner(const Partition& la, const Partition& mu);

/// Expansion of P_mu over monomial symmetric functions, all lengths kept.
using MExpansion = std::map<Partition, RatFunc>;

/// Cached Macdonald polynomial in the abstract m-basis, obtained by
/// Gram-Schmidt against the dominance-lower P's.
const MExpansion& macdonald_m_expansion(const Partition& mu);

/// Literal Gram-Schmidt over a full linear extension of dominance.
/// ext 0: lex ascending; ext 1: length descending then lex ascending.
/// Exists so the extension-independence property can be tested directly.
MExpansion macdonald_gs_literal(const Partition& mu, int ext);

/// <m_mu, m_nu> under the power-sum inner product (abstract ring).
RatFunc m_gram(const Partition& mu, const Partition& nu);

/// Symmetric polynomial in x_1..x_k carried in the m-basis with Q(q,t)
/// coefficients.
struct SymPoly {
    int k = 0;
    std::map<Partition, RatFunc> coeffs; // only lengths <= k

    bool is_zero() const { return coeffs.empty(); }
    SymPoly& operator*=(const RatFunc& c);
    SymPoly substituted_params(const SubstMap& rules) const;

    /// Expand into an explicit rational function of (x, q, t).
    RatFunc as_ratfunc() const;
    /// Evaluate at x_i = point[i] (coeff * monomial).
    RatFunc evaluated(const std::vector<std::pair<Scalar, Monomial>>& point) const;

    std::string text() const;
};

/// m_mu(x_1..x_k) as an explicit polynomial with unit coefficients.
LaurentPoly monomial_sym_poly(const Partition& mu, int k);
SymPoly monomial_sym(const Partition& mu, int k);

SymPoly macdonald_P(const Partition& mu, int k);

/// P_mu evaluated at a point, with the (q, t) parameter slots themselves
/// substituted by coeff * monomial expressions.
RatFunc macdonald_eval(const Partition& mu, const std::vector<std::pair<Scalar, Monomial>>& point,
                       const std::pair<Scalar, Monomial>& q_slot,
                       const std::pair<Scalar, Monomial>& t_slot);

/// The spectrum point (q^{mu_i} (t/q)^{i-1})_{i=1..k} used by the operator
/// eigenvalues, as monomials in q and t.
std::vector<std::pair<Scalar, Monomial>> spectrum_point(const Partition& mu, int k);

} // namespace qv::mac
