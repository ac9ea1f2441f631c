#include "qvertex/series.hpp"

#include "qvertex/errors.hpp"

#include <algorithm>

namespace qv {

// ---------------------------------------------------------------------------
// Caps

Caps::Caps(std::initializer_list<std::pair<Group, int>> caps) : caps_(caps) {
    std::sort(caps_.begin(), caps_.end());
}

std::optional<int> Caps::cap(Group g) const {
    for (const auto& [gg, c] : caps_)
        if (gg == g) return c;
    return std::nullopt;
}

bool Caps::admits(const Monomial& m) const {
    for (const auto& [g, c] : caps_)
        if (m.degree(g) > c) return false;
    return true;
}

Caps Caps::relaxed_by(const std::vector<std::pair<Group, int>>& extra) const {
    Caps r = *this;
    for (auto& [g, c] : r.caps_)
        for (const auto& [ge, ce] : extra)
            if (g == ge) c += ce;
    return r;
}

std::string Caps::text() const {
    std::string s = "[";
    bool first = true;
    for (const auto& [g, c] : caps_) {
        if (!first) s += ", ";
        first = false;
        switch (g) {
            case Group::Parameter: s += "parameter"; break;
            case Group::Kahler: s += "kahler"; break;
            case Group::Ratio: s += "ratio"; break;
            case Group::Generic: s += "generic"; break;
        }
        s += "<=" + std::to_string(c);
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries TruncatedSeries::one(const Caps& caps) {
    TruncatedSeries s(caps);
    s.add_term(Monomial{}, RatFunc::one());
    return s;
}

void TruncatedSeries::add_term(const Monomial& m, RatFunc coeff) {
    if (coeff.is_zero()) return;
    auto [key, rest] = m.split([&](Group g) { return caps_.is_capped(g); });
    if (!caps_.admits(key)) return;
    if (!rest.empty()) coeff.mul_monomial(rest);
    auto [it, fresh] = t_.try_emplace(key, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (caps_ != o.caps_) throw UsageError("series caps mismatch in addition");
    for (const auto& [m, c] : o.t_) {
        auto [it, fresh] = t_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (caps_ != o.caps_) throw UsageError("series caps mismatch in subtraction");
    for (const auto& [m, c] : o.t_) {
        auto [it, fresh] = t_.try_emplace(m, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.caps_ != b.caps_) throw UsageError("series caps mismatch in multiplication");
    TruncatedSeries r(a.caps_);
    for (const auto& [ma, ca] : a.t_) {
        for (const auto& [mb, cb] : b.t_) {
            Monomial m = ma * mb;
            if (!a.caps_.admits(m)) continue;
            RatFunc c = ca * cb;
            if (c.is_zero()) continue;
            auto [it, fresh] = r.t_.try_emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    }
    return r;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    *this = *this * o;
    return *this;
}

void TruncatedSeries::mul_coeff(const RatFunc& c) {
    if (c.is_zero()) {
        t_.clear();
        return;
    }
    for (auto& [m, cc] : t_) cc *= c;
}

void TruncatedSeries::mul_term(const Monomial& m, const RatFunc& c) {
    std::map<Monomial, RatFunc> old;
    old.swap(t_);
    for (auto& [mm, cc] : old) add_term(mm * m, cc * c);
}

TruncatedSeries TruncatedSeries::substituted(const SubstMap& rules, const Caps& new_caps) const {
    TruncatedSeries r(new_caps);
    for (const auto& [m, c] : t_) {
        auto [sc, sm] = m.substituted(rules);
        auto [key, rest] = sm.split([&](Group g) { return new_caps.is_capped(g); });
        for (const auto& [g, cap] : new_caps.entries())
            if (key.degree(g) < 0)
                throw CapViolation("substitution image " + sm.text() + " has negative degree in a capped group");
        RatFunc cc = c.substituted(rules);
        cc.mul_scalar(sc);
        r.add_term(sm, cc);
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(const Caps& caps) const {
    TruncatedSeries r(caps);
    for (const auto& [m, c] : t_) r.add_term(m, c);
    return r;
}

TruncatedSeries TruncatedSeries::inverted() const {
    auto it = t_.find(Monomial{});
    if (it == t_.end() || !ratfunc_equal(it->second, RatFunc::one()))
        throw UsageError("series inversion requires constant term 1");
    // total budget: sum of caps bounds the number of fixed-point iterations
    int budget = 0;
    for (const auto& [g, c] : caps_.entries()) budget += c;
    TruncatedSeries rest = *this;
    rest.t_.erase(Monomial{}); // s = 1 + rest
    TruncatedSeries inv = one(caps_);
    for (int i = 0; i < budget; ++i) {
        // inv <- 1 - rest*inv
        TruncatedSeries next = one(caps_);
        next -= rest * inv;
        if (next.t_ == inv.t_) break;
        inv = std::move(next);
    }
    return inv;
}

RatFunc TruncatedSeries::coefficient(const Monomial& key) const {
    auto it = t_.find(key);
    if (it == t_.end()) return RatFunc();
    return it->second;
}

std::vector<TruncatedSeries::Mismatch> TruncatedSeries::mismatches(const TruncatedSeries& o) const {
    if (caps_ != o.caps_) throw UsageError("series caps mismatch in comparison");
    std::vector<Mismatch> out;
    auto i = t_.begin();
    auto j = o.t_.begin();
    while (i != t_.end() || j != o.t_.end()) {
        if (j == o.t_.end() || (i != t_.end() && i->first < j->first)) {
            out.push_back({i->first, i->second, RatFunc()});
            ++i;
        } else if (i == t_.end() || j->first < i->first) {
            out.push_back({j->first, RatFunc(), j->second});
            ++j;
        } else {
            if (!ratfunc_equal(i->second, j->second)) out.push_back({i->first, i->second, j->second});
            ++i, ++j;
        }
    }
    return out;
}

bool TruncatedSeries::has_negative_capped_exponents() const {
    for (const auto& [m, c] : t_)
        for (const auto& [g, cap] : caps_.entries())
            if (m.degree(g) < 0) return true;
    return false;
}

std::string TruncatedSeries::text() const {
    std::string s = "series " + caps_.text() + "\n";
    if (t_.empty()) return s + "  0\n";
    for (const auto& [m, c] : t_) s += "  " + m.text() + " : " + c.text() + "\n";
    return s;
}

// ---------------------------------------------------------------------------
// expansion

namespace {

// (1 - c*m)^-mult as a series, summed while admitted by caps.
TruncatedSeries geometric(const Scalar& c, const Monomial& m, int mult, const Caps& caps) {
    TruncatedSeries s(caps);
    Scalar cj(1);
    Monomial mj;
    for (int j = 0;; ++j) {
        if (j > 0) {
            cj *= c;
            mj *= m;
            if (!caps.admits(mj)) break;
        }
        // binomial coefficient C(j+mult-1, mult-1)
        Scalar binom(1);
        for (int i = 1; i < mult; ++i) binom *= Scalar(j + i) / Scalar(i);
        s.add_term(mj, RatFunc(binom * cj));
    }
    return s;
}

struct BinomialFactor {
    Scalar c;   // (1 - c*m)
    Monomial m; // oriented to positive capped degree
};

// Decompose a canonical denominator factor (known to involve capped
// variables) as unit * (1 - c*m) with m of positive degree in a capped
// group. Returns the unit (scalar, monomial) to divide out.
std::pair<Scalar, Monomial> orient_factor(const LaurentPoly& f, Group expand_group, const Caps& caps,
                                          BinomialFactor& out) {
    if (f.size() != 2)
        throw NonExpandablePole("denominator factor is not binomial: " + f.text());
    const auto& lo = f.trailing();
    const auto& hi = f.leading();
    // f = lo + hi = lo * (1 - c*m) with m = hi/lo
    Scalar c = -hi.second / lo.second;
    Monomial m = hi.first * lo.first.inverse();
    int d = m.degree(expand_group);
    if (d == 0) {
        for (const auto& [g, cap] : caps.entries()) {
            if (g == expand_group) continue;
            if (int dd = m.degree(g); dd != 0) {
                d = dd;
                break;
            }
        }
    }
    if (d == 0)
        throw NonExpandablePole("denominator factor " + f.text() +
                                " has zero net degree in the expansion group");
    if (d < 0) {
        // (1 - c*m) = (-c*m) * (1 - m^-1/c)
        out.c = Scalar(1) / c;
        out.m = m.inverse();
        return {hi.second, hi.first};
    }
    out.c = c;
    out.m = m;
    return {lo.second, lo.first};
}

bool involves_capped(const LaurentPoly& p, const Caps& caps) {
    for (VarId v : p.variables())
        if (caps.is_capped(vars::group(v))) return true;
    return false;
}

} // namespace

TruncatedSeries series_expand(const RatFunc& f, Group expand_group, const Caps& caps) {
    if (f.is_zero()) return TruncatedSeries(caps);
    // Slack for Laurent parts: factor products may overshoot the caps before
    // negative exponents from the numerator or factor units pull them back.
    std::vector<std::pair<Group, int>> slack;
    for (const auto& [g, c] : caps.entries()) {
        int s = -std::min(0, f.num().min_degree(g));
        for (const auto& [p, mult] : f.den_factors())
            if (p.size() == 2) s += std::max(0, p.trailing().first.degree(g) * mult);
        if (s > 0) slack.emplace_back(g, s);
    }
    Caps work = caps.relaxed_by(slack);

    TruncatedSeries acc = TruncatedSeries::one(work);
    RatFunc::Factors coeff_den; // denominator factors free of capped variables
    for (const auto& [p, mult] : f.den_factors()) {
        if (!involves_capped(p, caps)) {
            coeff_den.emplace_back(p, mult);
            continue;
        }
        BinomialFactor bf;
        auto [uc, um] = orient_factor(p, expand_group, caps, bf);
        acc *= geometric(bf.c, bf.m, mult, work);
        acc.mul_term(um.pow(-mult), RatFunc(LaurentPoly::from_scalar(scalar_pow(uc, -mult))));
    }
    RatFunc cden = RatFunc::from_parts(LaurentPoly::one(), std::move(coeff_den));
    TruncatedSeries out(caps);
    for (const auto& [key, c] : acc.terms()) {
        for (const auto& [nm, nc] : f.num().terms()) {
            Monomial m = key * nm;
            if (!caps.admits(m)) continue;
            RatFunc cc = c * cden;
            cc.mul_scalar(nc);
            out.add_term(m, cc);
        }
    }
    return out;
}

TruncatedSeries series_expand(const QRatio& f, Group expand_group, const Caps& caps) {
    return series_expand(f.to_ratfunc(), expand_group, caps);
}

TruncatedSeries phi_truncated(const Scalar& c, const Monomial& m, const Caps& caps, int mult) {
    bool positive = false;
    for (const auto& [g, cap] : caps.entries()) {
        int d = m.degree(g);
        if (d > 0) positive = true;
        if (d < 0) throw NonTruncating("phi argument " + m.text() + " has negative capped degree");
    }
    if (!positive)
        throw NonTruncating("phi argument " + m.text() + " never leaves the truncation window");

    Monomial q = Monomial::var(vars::q());
    // phi(x) = sum_d (-1)^d q^{d(d-1)/2} x^d / (q;q)_d,  1/phi(x) = sum_d x^d / (q;q)_d
    auto euler = [&](bool direct) {
        TruncatedSeries s(caps);
        Scalar cd(1);
        Monomial md;
        RatFunc::Factors qden;
        for (int d = 0;; ++d) {
            if (d > 0) {
                cd *= c;
                md *= m;
                if (!caps.admits(md)) break;
                qden.emplace_back(LaurentPoly::one() - LaurentPoly::variable(vars::q(), d), 1);
            }
            LaurentPoly num = LaurentPoly::from_scalar(direct && (d % 2 == 1) ? -cd : cd);
            Monomial key = direct ? md * q.pow(d * (d - 1) / 2) : md;
            s.add_term(key, RatFunc::from_parts(num, qden));
        }
        return s;
    };
    TruncatedSeries base = euler(mult > 0);
    TruncatedSeries out = TruncatedSeries::one(caps);
    for (int i = 0; i < std::abs(mult); ++i) out *= base;
    return out;
}

} // namespace qv
