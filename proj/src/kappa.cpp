#include "qvertex/kappa.hpp"

#include "qvertex/errors.hpp"

namespace qv::dual {

SubstMap kappa_rules(int k, int n) {
    if (k < 1 || 2 * k > n) throw UsageError("require 1 <= k and 2k <= n");
    SubstMap rules;
    for (int i = 1; i <= n - 1; ++i) {
        int e = i < k ? -1 : (i < n - k ? 0 : 1);
        rules[vars::z(i)] = {Scalar(1), Monomial::var(vars::hbar(), e) * Monomial::var(vars::r(i))};
    }
    rules[vars::hbar_dual()] = {Scalar(1), Monomial::var(vars::q()) * Monomial::var(vars::hbar(), -1)};
    rules[vars::u()] = {Scalar(1), Monomial::var(vars::z()) * Monomial::var(vars::hbar(), k) *
                                       Monomial::var(vars::q(), -k)};
    return rules;
}

SubstMap kappa_inverse_rules(int k, int n) {
    if (k < 1 || 2 * k > n) throw UsageError("require 1 <= k and 2k <= n");
    SubstMap rules;
    for (int i = 1; i <= n - 1; ++i) {
        int e = i < k ? -1 : (i < n - k ? 0 : 1);
        // inverse image of r_i is z_i * (q/hbar_dual)^{-e}
        rules[vars::r(i)] = {Scalar(1), Monomial::var(vars::z(i)) * Monomial::var(vars::q(), -e) *
                                            Monomial::var(vars::hbar_dual(), e)};
    }
    rules[vars::hbar()] = {Scalar(1), Monomial::var(vars::q()) * Monomial::var(vars::hbar_dual(), -1)};
    rules[vars::z()] = {Scalar(1), Monomial::var(vars::u()) * Monomial::var(vars::hbar_dual(), k)};
    return rules;
}

TruncatedSeries kappa(const TruncatedSeries& s, int k, int n, const Caps& out_caps) {
    return s.substituted(kappa_rules(k, n), out_caps);
}

Monomial ratio_of_a(int j, int i) {
    Monomial m;
    if (j > i)
        for (int l = i; l < j; ++l) m *= Monomial::var(vars::r(l));
    else
        for (int l = j; l < i; ++l) m *= Monomial::var(vars::r(l), -1);
    return m;
}

Monomial to_ratio_frame(const Monomial& m) {
    Monomial out;
    int total = 0;
    std::vector<std::pair<int, int>> a_exps; // (index i, exponent)
    for (const auto& [v, e] : m.entries()) {
        bool is_a = false;
        for (int i = 1; i <= vars::kMaxN; ++i)
            if (v == vars::a(i)) {
                a_exps.emplace_back(i, e);
                total += e;
                is_a = true;
                break;
            }
        if (!is_a) out *= Monomial::var(v, e);
    }
    if (total != 0) throw UsageError("monomial " + m.text() + " is not of a-degree zero");
    // prod a_i^{e_i} = prod_l r_l^{sum_{i>l} e_i}
    for (const auto& [i, e] : a_exps)
        for (int l = 1; l < i; ++l) out *= Monomial::var(vars::r(l), e);
    return out;
}

LaurentPoly to_ratio_frame(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) out += LaurentPoly::term(c, to_ratio_frame(m));
    return out;
}

QRatio to_ratio_frame(const QRatio& r) {
    QRatio out = QRatio::unit(r.unit_scalar(), to_ratio_frame(r.unit_monomial()));
    for (int i = 0; i < r.zero_net(); ++i) out.push(Scalar(1), Monomial{}, 1);
    for (int i = 0; i > r.zero_net(); --i) out.push(Scalar(1), Monomial{}, -1);
    for (const auto& [f, mult] : r.factors()) out.push(f.c, to_ratio_frame(f.m), mult);
    return out;
}

RatFunc to_ratio_frame(const RatFunc& f) {
    RatFunc out(to_ratio_frame(f.num()));
    for (const auto& [p, mult] : f.den_factors())
        out = out * RatFunc::from_parts(LaurentPoly::one(), {{to_ratio_frame(p), mult}});
    return out;
}

SubstMap ratio_shift_rules(int k, int n, const std::vector<int>& comp) {
    if (static_cast<int>(comp.size()) != k) throw UsageError("composition length must equal k");
    auto D = [&](int i) { return (i > n - k && i <= n) ? comp[static_cast<size_t>(i - (n - k) - 1)] : 0; };
    SubstMap rules;
    for (int j = 1; j <= n - 1; ++j) {
        int e = D(j + 1) - D(j);
        if (e != 0)
            rules[vars::r(j)] = {Scalar(1), Monomial::var(vars::q(), e) * Monomial::var(vars::r(j))};
    }
    return rules;
}

} // namespace qv::dual
