#include "qvertex/vertex.hpp"

#include "qvertex/errors.hpp"

namespace qv::vx {

DegreeLayout::DegreeLayout(const std::vector<int>& v) : dims(v) {
    offsets.reserve(v.size());
    for (int d : v) {
        offsets.push_back(total);
        total += d;
    }
}

std::vector<std::vector<int>> degree_tuples(int length, int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(length), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == length) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, cap);
    return out;
}

QRatio chain_summand(const QuiverA& quiver, int split_node,
                     const std::vector<std::pair<int, bool>>& framings, const DegreeLayout& layout,
                     const std::vector<int>& d) {
    const Monomial q = Monomial::var(vars::q());
    const Monomial hb = Monomial::var(vars::hbar_dual());
    const Monomial uu = Monomial::var(vars::u());
    int nodes = quiver.nodes();
    QRatio c;

    for (const auto& [f, with_u] : framings) {
        for (int j = 1; j <= quiver.dim(f); ++j) {
            int dj = layout.deg(d, f, j);
            Monomial top = hb.pow(j);
            Monomial bot = q * hb.pow(j - 1);
            if (with_u) {
                top *= uu;
                bot *= uu;
            }
            c *= qpoch(Scalar(1), top, dj);
            c *= qpoch(Scalar(1), bot, dj).inverse();
        }
    }

    for (int i = 1; i <= nodes - 1; ++i) {
        int off = i < split_node ? 0 : 1;
        for (int j = 1; j <= quiver.dim(i); ++j)
            for (int l = 1; l <= quiver.dim(i + 1); ++l) {
                int delta = layout.deg(d, i + 1, l) - layout.deg(d, i, j);
                c *= qpoch(Scalar(1), hb.pow(l - j + off), delta);
                c *= qpoch(Scalar(1), q * hb.pow(l - j - 1 + off), delta).inverse();
            }
    }

    for (int i = 1; i <= nodes; ++i)
        for (int j = 1; j <= quiver.dim(i); ++j)
            for (int l = 1; l <= quiver.dim(i); ++l) {
                int delta = layout.deg(d, i, l) - layout.deg(d, i, j);
                c *= qpoch(Scalar(1), q * hb.pow(l - j), delta);
                c *= qpoch(Scalar(1), hb.pow(l - j + 1), delta).inverse();
            }

    return c;
}

Monomial chain_z_monomial(const QuiverA& quiver, const DegreeLayout& layout, const std::vector<int>& d) {
    Monomial m;
    for (int i = 1; i <= quiver.nodes(); ++i) {
        int total = 0;
        for (int j = 1; j <= quiver.dim(i); ++j) total += layout.deg(d, i, j);
        if (total != 0) m *= Monomial::var(vars::z(i), total);
    }
    return m;
}

std::vector<std::pair<Scalar, Monomial>> insertion_point(const std::vector<int>& node_degrees) {
    std::vector<std::pair<Scalar, Monomial>> pt;
    for (size_t j = 0; j < node_degrees.size(); ++j) {
        Monomial m = Monomial::var(vars::hbar_dual(), static_cast<int>(j));
        m *= Monomial::var(vars::q(), node_degrees[j]);
        pt.emplace_back(Scalar(1), m);
    }
    return pt;
}

TruncatedSeries vertex_xlambda(const Partition& lambda, const Caps& caps, const mac::SymPoly* tau,
                               int insertion_node) {
    TruncatedSeries s(caps);
    if (lambda.empty()) {
        s.add_term(Monomial{}, RatFunc::one());
        return s;
    }
    QuiverA quiver = QuiverA::from_partition(lambda);
    DegreeLayout layout(quiver.v);
    auto zcap = caps.cap(Group::Kahler);
    if (!zcap) throw UsageError("vertex series needs a Kahler cap");
    if (tau) {
        if (insertion_node < 1 || insertion_node > quiver.nodes())
            throw UsageError("descendant insertion node out of range");
        if (tau->k != quiver.dim(insertion_node))
            throw LengthError("descendant variable count must match the node dimension");
    }
    for (const auto& d : degree_tuples(layout.total, *zcap)) {
        QRatio c = chain_summand(quiver, lambda.first(), {{lambda.first(), false}}, layout, d);
        if (c.is_zero()) continue;
        RatFunc coeff = c.to_ratfunc();
        if (tau) {
            std::vector<int> nd;
            for (int j = 1; j <= quiver.dim(insertion_node); ++j) nd.push_back(layout.deg(d, insertion_node, j));
            coeff *= tau->evaluated(insertion_point(nd));
            if (coeff.is_zero()) continue;
        }
        s.add_term(chain_z_monomial(quiver, layout, d), std::move(coeff));
    }
    return s;
}

TruncatedSeries vertex_xdual(int k, int n, const Caps& caps) {
    QuiverA quiver = QuiverA::dual_grassmannian(k, n);
    DegreeLayout layout(quiver.v);
    auto zcap = caps.cap(Group::Kahler);
    if (!zcap || !caps.cap(Group::Ratio)) throw UsageError("dual vertex needs Kahler and Ratio caps");
    TruncatedSeries s(caps);
    for (const auto& d : degree_tuples(layout.total, *zcap)) {
        QRatio c = chain_summand(quiver, k, {{k, false}, {n - k, true}}, layout, d);
        if (c.is_zero()) continue;
        TruncatedSeries part = series_expand(c.to_ratfunc(), Group::Ratio, caps);
        part.mul_term(chain_z_monomial(quiver, layout, d), RatFunc::one());
        s += part;
    }
    return s;
}

std::map<std::vector<int>, QRatio> vertex_x_summands(int k, int n, int zcap) {
    if (k < 1 || 2 * k > n) throw UsageError("require 1 <= k and 2k <= n");
    const Monomial q = Monomial::var(vars::q());
    const Monomial hb = Monomial::var(vars::hbar());
    std::map<std::vector<int>, QRatio> out;
    for (const auto& d : degree_tuples(k, zcap)) {
        QRatio c;
        auto dj = [&](int j) { return d[static_cast<size_t>(j - (n - k) - 1)]; };
        for (int i = 1; i <= n; ++i)
            for (int j = n - k + 1; j <= n; ++j) {
                Monomial aji = Monomial::var(vars::a(j)) * Monomial::var(vars::a(i), -1);
                c *= qpoch(Scalar(1), hb * aji, dj(j));
                c *= qpoch(Scalar(1), q * aji, dj(j)).inverse();
            }
        for (int i = n - k + 1; i <= n; ++i)
            for (int j = n - k + 1; j <= n; ++j) {
                Monomial aji = Monomial::var(vars::a(j)) * Monomial::var(vars::a(i), -1);
                int delta = dj(j) - dj(i);
                c *= qpoch(Scalar(1), q * aji, delta);
                c *= qpoch(Scalar(1), hb * aji, delta).inverse();
            }
        out.emplace(d, std::move(c));
    }
    return out;
}

TruncatedSeries vertex_x_series(int k, int n, const Caps& caps) {
    auto zcap = caps.cap(Group::Kahler);
    if (!zcap) throw UsageError("vertex series needs a Kahler cap");
    TruncatedSeries s(caps);
    for (const auto& [d, c] : vertex_x_summands(k, n, *zcap)) {
        int total = 0;
        for (int v : d) total += v;
        s.add_term(Monomial::var(vars::z(), total), c.to_ratfunc());
    }
    return s;
}

// ---------------------------------------------------------------------------
// phi products

void PhiProduct::push(const Scalar& c, const Monomial& m, int mult) {
    if (mult == 0) return;
    for (auto it = args_.begin(); it != args_.end(); ++it) {
        if (it->first.first == c && it->first.second == m) {
            it->second += mult;
            if (it->second == 0) args_.erase(it);
            return;
        }
    }
    args_.push_back({{c, m}, mult});
}

PhiProduct PhiProduct::inverse() const {
    PhiProduct p = *this;
    for (auto& [arg, m] : p.args_) m = -m;
    return p;
}

PhiProduct PhiProduct::substituted(const SubstMap& rules) const {
    PhiProduct p;
    for (const auto& [arg, m] : args_) {
        auto [c, mono] = arg.second.substituted(rules);
        p.push(arg.first * c, mono, m);
    }
    return p;
}

PhiProduct& PhiProduct::operator*=(const PhiProduct& o) {
    for (const auto& [arg, m] : o.args_) push(arg.first, arg.second, m);
    return *this;
}

TruncatedSeries PhiProduct::expand(const Caps& caps) const {
    TruncatedSeries s = TruncatedSeries::one(caps);
    for (const auto& [arg, m] : args_) s *= phi_truncated(arg.first, arg.second, caps, m);
    return s;
}

QRatio PhiProduct::shift_quotient(const SubstMap& shift) const {
    QRatio out;
    for (const auto& [arg, mult] : args_) {
        auto [c, mono] = arg.second.substituted(shift);
        Monomial ratio = mono * arg.second.inverse();
        int s = 0;
        for (const auto& [v, e] : ratio.entries()) {
            if (v != vars::q()) throw UsageError("shift must scale phi arguments by powers of q");
            s = e;
        }
        if (c != arg.first) throw UsageError("shift must not change phi argument coefficients");
        // phi(x q^s)/phi(x) = (x)_s^{-1} for every integer s
        out *= qpoch(arg.first, arg.second, s).pow(-mult);
    }
    return out;
}

PhiProduct vertex_product(const Partition& lambda) {
    PhiProduct p;
    for (Cell cell : lambda.cells()) {
        Monomial zb = zbox(lambda, cell);
        p.push(Scalar(1), zb * Monomial::var(vars::hbar_dual()), 1);
        p.push(Scalar(1), zb, -1);
    }
    return p;
}

PhiProduct prefactor_dual(int k) {
    PhiProduct p;
    Monomial uu = Monomial::var(vars::u());
    for (int i = 1; i <= k; ++i) {
        p.push(Scalar(1), uu * Monomial::var(vars::hbar_dual(), i), 1);
        p.push(Scalar(1), uu * Monomial::var(vars::q()) * Monomial::var(vars::hbar_dual(), i - 1), -1);
    }
    return p;
}

PhiProduct prefactor_x(int k) {
    PhiProduct p;
    Monomial zz = Monomial::var(vars::z());
    for (int i = 1; i <= k; ++i) {
        Monomial base = Monomial::var(vars::hbar(), i - 1) * Monomial::var(vars::q(), -(i - 1)) * zz;
        p.push(Scalar(1), base, 1);
        p.push(Scalar(1), base * Monomial::var(vars::hbar()), -1);
    }
    return p;
}

RowDescendant row_descendant(int d, int k) {
    RowDescendant rd;
    SubstMap params;
    params[vars::t()] = {Scalar(1), Monomial::var(vars::q()) * Monomial::var(vars::hbar_dual(), -1)};
    rd.tau = mac::macdonald_P(Partition(std::vector<int>{d}), k).substituted_params(params);
    Monomial qhb = Monomial::var(vars::q()) * Monomial::var(vars::hbar_dual(), -1);
    QRatio ratio = qpoch(Scalar(1), qhb, d) * qpoch(Scalar(1), Monomial::var(vars::q()), d).inverse();
    rd.scale = ratio.to_ratfunc();
    return rd;
}

} // namespace qv::vx
