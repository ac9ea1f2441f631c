#include "qvertex/quiver.hpp"

#include "qvertex/errors.hpp"

namespace qv {

QuiverA QuiverA::dual_grassmannian(int k, int n) {
    if (k < 1 || 2 * k > n) throw UsageError("require 1 <= k and 2k <= n");
    QuiverA q;
    q.v.resize(static_cast<size_t>(n - 1));
    q.w.assign(static_cast<size_t>(n - 1), 0);
    for (int i = 1; i <= n - 1; ++i) {
        int vi = i < k ? i : (i <= n - k ? k : n - i);
        q.v[static_cast<size_t>(i - 1)] = vi;
    }
    q.w[static_cast<size_t>(k - 1)] += 1;
    q.w[static_cast<size_t>(n - k - 1)] += 1;
    return q;
}

QuiverA QuiverA::from_partition(const Partition& lambda) {
    QuiverA q;
    if (lambda.empty()) return q;
    int nodes = lambda.first() + lambda.length() - 1;
    q.v.assign(static_cast<size_t>(nodes), 0);
    q.w.assign(static_cast<size_t>(nodes), 0);
    for (Cell c : lambda.cells()) ++q.v[static_cast<size_t>(content(lambda, c) - 1)];
    q.w[static_cast<size_t>(lambda.first() - 1)] = 1;
    return q;
}

int sigma_lambda(const Partition& lambda, int i) {
    QuiverA q = QuiverA::from_partition(lambda);
    int s = q.dim(i - 1) - q.dim(i);
    if (i == lambda.first()) s += 1;
    return s;
}

Monomial zhat(const Partition& lambda, int i) {
    int s = sigma_lambda(lambda, i);
    Monomial m = Monomial::var(vars::z(i));
    m *= Monomial::var(vars::hbar_dual(), s);
    m *= Monomial::var(vars::q(), -s);
    return m;
}

Monomial zbox(const Partition& lambda, Cell c) {
    Monomial m;
    for (Cell h : hook(lambda, c)) m *= zhat(lambda, content(lambda, h));
    return m;
}

} // namespace qv
