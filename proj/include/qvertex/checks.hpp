#pragma once

#include "qvertex/partition.hpp"
#include "qvertex/report.hpp"

#include <vector>

namespace qv::checks {

/// Operator spectrum on Macdonald polynomials (exact identity in x, q, t).
CheckReport check_diagonal(const Partition& mu, int d, int k);

/// Generating-function form: reassemble sum_d z^d D_d P and compare against
/// the phi-ratio product, truncated in z.
CheckReport check_diagonal2(const Partition& mu, int k, int zcap);

/// Pairwise commutativity of the D_d via symbolic composition.
CheckReport check_commute(int k, int dmax);

/// Term-by-term equality of the two forms of the operator coefficients.
CheckReport check_rewrite(int k, int dmax);

/// prod_i phi(y t x_i)/phi(y x_i) = sum_d (t)_d/(q)_d P_(d) y^d.
CheckReport check_qbinomial(int k, int ycap);

/// q-Selberg evaluation as a truncated series identity in z.
CheckReport check_selberg(const Partition& mu, int k, int zcap);

/// Point-variety vertex sum equals the hook phi-product.
CheckReport check_verpoint(const Partition& lambda, int zcap);

/// kappa of the point-variety product equals the a-ratio phi-product.
CheckReport check_prform(int k, int n, int rcap);

/// Dual vertex equals prefactor times the descendant-inserted point vertex.
CheckReport check_reduce(int k, int n, int zcap, int ucap);

/// D_d acting on kappa(V_lambda) equals kappa of the descendant insertion.
CheckReport check_insertion(int k, int n, int d, int rcap);

/// The shift quotients of kappa(V_lambda) and the coefficient match with the
/// X-side vertex summand, exact in ratio coordinates.
CheckReport check_vgrcoeff(int k, int n, const std::vector<int>& dtuple);

/// The duality theorem: normalized X-side vertex re-expanded in the a-ratios
/// equals kappa of the normalized dual vertex, coefficient by coefficient.
CheckReport check_main(int k, int n, int zcap, int rcap);

/// Orthogonality and unitriangularity of the Macdonald basis.
CheckReport check_macdonald(int weight_max, int kmax);

/// Randomized audit: vertex summands either vanish exactly or are finite;
/// an uncancelled pole is a failure. Also asserts the known out-of-cone
/// family (descending degrees at the last framed node) vanishes.
CheckReport check_cone(int min_zero_samples, unsigned seed);

/// Serialization round-trip and golden/report determinism.
CheckReport check_infrastructure();

} // namespace qv::checks
