#include "qvertex/qratio.hpp"

#include "qvertex/errors.hpp"

#include <algorithm>

namespace qv {

void QRatio::push(const Scalar& c, const Monomial& m, int mult) {
    if (mult == 0) return;
    if (c == 0) return; // factor is 1
    if (m.empty()) {
        if (c == 1) {
            zero_net_ += mult; // the factor (1 - 1)
        } else {
            unit_c_ *= scalar_pow(Scalar(1) - c, mult);
        }
        return;
    }
    if (Monomial::cmp(m, Monomial{}) < 0) {
        // (1 - c*m) = (-c*m) * (1 - m^-1/c); keep factor monomials above 1
        unit_c_ *= scalar_pow(-c, mult);
        unit_m_ *= m.pow(mult);
        push(Scalar(1) / c, m.inverse(), mult);
        return;
    }
    QFactor key{c, m};
    auto it = std::lower_bound(f_.begin(), f_.end(), key,
                               [](const auto& e, const QFactor& k) { return e.first < k; });
    if (it != f_.end() && it->first == key) {
        it->second += mult;
        if (it->second == 0) f_.erase(it);
    } else {
        f_.insert(it, {key, mult});
    }
}

void QRatio::mul_unit(const Scalar& c, const Monomial& m) {
    unit_c_ *= c;
    unit_m_ *= m;
}

QRatio& QRatio::operator*=(const QRatio& o) {
    unit_c_ *= o.unit_c_;
    unit_m_ *= o.unit_m_;
    zero_net_ += o.zero_net_;
    for (const auto& [f, mult] : o.f_) push(f.c, f.m, mult);
    return *this;
}

QRatio QRatio::pow(int n) const {
    QRatio r;
    if (n == 0) return r;
    r.unit_c_ = scalar_pow(unit_c_, n);
    r.unit_m_ = unit_m_.pow(n);
    r.zero_net_ = zero_net_ * n;
    r.f_ = f_;
    for (auto& [f, mult] : r.f_) mult *= n;
    if (n < 0) std::sort(r.f_.begin(), r.f_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

QRatio QRatio::substituted(const SubstMap& rules) const {
    QRatio r;
    auto [uc, um] = unit_m_.substituted(rules);
    r.unit_c_ = unit_c_ * uc;
    r.unit_m_ = um;
    r.zero_net_ = zero_net_;
    for (const auto& [f, mult] : f_) {
        auto [fc, fm] = f.m.substituted(rules);
        r.push(f.c * fc, fm, mult);
    }
    return r;
}

RatFunc QRatio::to_ratfunc() const {
    if (zero_net_ > 0) return RatFunc(); // exact zero
    if (zero_net_ < 0) throw PoleError("uncancelled zero factor of multiplicity " + std::to_string(zero_net_));
    LaurentPoly num = LaurentPoly::term(unit_c_, unit_m_);
    RatFunc::Factors den;
    for (const auto& [f, mult] : f_) {
        LaurentPoly lin = LaurentPoly::one() - LaurentPoly::term(f.c, f.m);
        if (mult > 0) num *= lin.pow(static_cast<unsigned>(mult));
        else den.emplace_back(lin, -mult);
    }
    return RatFunc::from_parts(std::move(num), std::move(den));
}

std::string QRatio::text() const {
    if (is_zero()) return "0";
    std::string s = LaurentPoly::term(unit_c_, unit_m_).text();
    for (const auto& [f, mult] : f_) {
        LaurentPoly lin = LaurentPoly::one() - LaurentPoly::term(f.c, f.m);
        s += " * (" + lin.text() + ")";
        if (mult != 1) s += "^" + std::to_string(mult);
    }
    if (zero_net_ < 0) s += " * (1 - 1)^" + std::to_string(zero_net_);
    return s;
}

QRatio qpoch(const Scalar& c, const Monomial& m, int n) {
    QRatio r;
    Monomial q = Monomial::var(vars::q());
    if (n >= 0) {
        for (int i = 0; i < n; ++i) r.push(c, m * q.pow(i), 1);
    } else {
        for (int i = 1; i <= -n; ++i) r.push(c, m * q.pow(-i), -1);
    }
    return r;
}

RatFunc qfactor_ratio(const std::vector<QRatio>& num, const std::vector<QRatio>& den) {
    QRatio acc;
    for (const auto& r : num) acc *= r;
    for (const auto& r : den) acc *= r.inverse();
    return acc.to_ratfunc();
}

bool qratio_equal(const QRatio& a, const QRatio& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.zero_net() != b.zero_net()) return false;
    if (a.unit_scalar() == b.unit_scalar() && a.unit_monomial() == b.unit_monomial() &&
        a.factors() == b.factors())
        return true;
    // compare the regular parts; matching zero_net was already required
    auto regular = [](const QRatio& r) {
        QRatio c = QRatio::unit(r.unit_scalar(), r.unit_monomial());
        for (const auto& [f, mult] : r.factors()) c.push(f.c, f.m, mult);
        return c.to_ratfunc();
    };
    return ratfunc_equal(regular(a), regular(b));
}

} // namespace qv
