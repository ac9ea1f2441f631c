#pragma once

#include "qvertex/poly.hpp"

namespace qv {

/// Divide num and den by their polynomial GCD. Only implemented for
/// polynomials in at most two variables (which covers every coefficient
/// field that appears in practice: Q(q,t), Q(q,hbar), ...); returns false
/// and leaves the pair untouched otherwise.
bool gcd_reduce(LaurentPoly& num, LaurentPoly& den);

} // namespace qv
