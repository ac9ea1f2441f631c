#pragma once

#include "qvertex/qratio.hpp"
#include "qvertex/series.hpp"

#include <vector>

namespace qv::dual {

/// The parameter identification between the dual side (z_i, hbar_dual, u, q)
/// and the X side (a-ratios r_i, hbar, z, q):
///   z_i -> hbar^{-1} r_i (i < k),  r_i (k <= i < n-k),  hbar r_i (i >= n-k)
///   hbar_dual -> q/hbar,   u -> z (hbar/q)^k,   q -> q.
SubstMap kappa_rules(int k, int n);
SubstMap kappa_inverse_rules(int k, int n);

/// Apply the identification to a whole series (keys and coefficients),
/// re-truncating into out_caps.
TruncatedSeries kappa(const TruncatedSeries& s, int k, int n, const Caps& out_caps);

/// a_j/a_i written in the ratio coordinates r_l = a_{l+1}/a_l.
Monomial ratio_of_a(int j, int i);

/// Translate a monomial of a-degree zero into ratio coordinates; throws
/// UsageError when the total a-degree is nonzero.
Monomial to_ratio_frame(const Monomial& m);
LaurentPoly to_ratio_frame(const LaurentPoly& p);
QRatio to_ratio_frame(const QRatio& r);
RatFunc to_ratio_frame(const RatFunc& f);

/// Substitution realizing p^comp in ratio coordinates: shifting a_{n-k+m} by
/// q^{comp_m} scales r_j by q^{D_{j+1} - D_j}.
SubstMap ratio_shift_rules(int k, int n, const std::vector<int>& comp);

} // namespace qv::dual
