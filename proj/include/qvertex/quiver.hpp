#pragma once

#include "qvertex/monomial.hpp"
#include "qvertex/partition.hpp"

#include <vector>

namespace qv {

/// A-type quiver data: dimension vector v_1..v_N and framing vector w_1..w_N.
struct QuiverA {
    std::vector<int> v; // v[i-1] is the dimension at node i
    std::vector<int> w;

    int nodes() const { return static_cast<int>(v.size()); }
    int dim(int i) const { return i >= 1 && i <= nodes() ? v[static_cast<size_t>(i - 1)] : 0; }
    int framing(int i) const { return i >= 1 && i <= nodes() ? w[static_cast<size_t>(i - 1)] : 0; }

    /// The dual of T*Gr(k,n): nodes 1..n-1, v_i = min(i, k, n-i),
    /// framings at k and n-k. Requires 2k <= n.
    static QuiverA dual_grassmannian(int k, int n);

    /// The point variety X_lambda: v_i = #{cells of content i}, one framing
    /// at node lambda_1.
    static QuiverA from_partition(const Partition& lambda);
};

/// sigma_lambda(i) = v_{i-1} - v_i with the +1 correction at the framing
/// node i = lambda_1 (v_0 = 0 and v vanishes beyond the last node).
int sigma_lambda(const Partition& lambda, int i);

/// The shifted Kahler parameter zhat_i = (hbar_dual/q)^{sigma_lambda(i)} z_i.
Monomial zhat(const Partition& lambda, int i);

/// z_box = prod over the hook based at the cell of zhat_{content}, a
/// monomial in the z_i, hbar_dual and q.
Monomial zbox(const Partition& lambda, Cell c);

} // namespace qv
