#include "qvertex/ratfunc.hpp"

#include "qvertex/errors.hpp"
#include "qvertex/gcd.hpp"

#include <algorithm>
#include <set>

namespace qv {
namespace {

// Split raw into unit_scalar * unit_monomial * canonical where the canonical
// poly is monomial-content free with trailing coefficient 1.
struct NormalizedFactor {
    Scalar unit_c;
    Monomial unit_m;
    LaurentPoly poly;
};

NormalizedFactor normalize_factor(const LaurentPoly& raw) {
    NormalizedFactor nf;
    nf.unit_c = Scalar(1);
    nf.poly = raw;
    Monomial content = nf.poly.monomial_content();
    if (!content.empty()) {
        nf.unit_m = content;
        nf.poly.mul_monomial(content.inverse());
    }
    Scalar lead = nf.poly.trailing().second;
    if (lead != 1) {
        nf.unit_c = lead;
        nf.poly.mul_scalar(Scalar(1) / lead);
    }
    return nf;
}

} // namespace

void RatFunc::push_den(const LaurentPoly& raw, int mult) {
    if (mult == 0) return;
    if (raw.is_zero()) throw PoleError("division by zero polynomial");
    NormalizedFactor nf = normalize_factor(raw);
    num_.mul_scalar(scalar_pow(nf.unit_c, -mult));
    num_.mul_monomial(nf.unit_m.pow(-mult));
    if (nf.poly.is_one()) return;
    auto it = std::lower_bound(den_.begin(), den_.end(), nf.poly,
                               [](const auto& f, const LaurentPoly& p) { return f.first < p; });
    if (it != den_.end() && it->first == nf.poly) {
        it->second += mult;
        if (it->second == 0) den_.erase(it);
        else if (it->second < 0) {
            // negative multiplicity means this factor belongs to the numerator
            int m = -it->second;
            den_.erase(it);
            num_ *= nf.poly.pow(static_cast<unsigned>(m));
        }
    } else {
        if (mult < 0) {
            num_ *= nf.poly.pow(static_cast<unsigned>(-mult));
        } else {
            den_.insert(it, {nf.poly, mult});
        }
    }
}

RatFunc RatFunc::fraction(const LaurentPoly& n, const LaurentPoly& d) {
    RatFunc r(n);
    r.push_den(d, 1);
    return r;
}

RatFunc RatFunc::from_parts(LaurentPoly num, Factors den) {
    RatFunc r(std::move(num));
    for (const auto& [f, m] : den) r.push_den(f, m);
    return r;
}

LaurentPoly RatFunc::den_poly() const {
    LaurentPoly d = LaurentPoly::one();
    for (const auto& [f, m] : den_) d *= f.pow(static_cast<unsigned>(m));
    return d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    // denominator LCM: factor-wise max multiplicity
    LaurentPoly lhs = num_, rhs = o.num_;
    Factors lcm;
    size_t i = 0, j = 0;
    auto mul_pow = [](LaurentPoly& p, const LaurentPoly& f, int m) {
        if (m > 0) p *= f.pow(static_cast<unsigned>(m));
    };
    while (i < den_.size() || j < o.den_.size()) {
        if (j >= o.den_.size() || (i < den_.size() && den_[i].first < o.den_[j].first)) {
            lcm.push_back(den_[i]);
            mul_pow(rhs, den_[i].first, den_[i].second);
            ++i;
        } else if (i >= den_.size() || o.den_[j].first < den_[i].first) {
            lcm.push_back(o.den_[j]);
            mul_pow(lhs, o.den_[j].first, o.den_[j].second);
            ++j;
        } else {
            int m = std::max(den_[i].second, o.den_[j].second);
            lcm.emplace_back(den_[i].first, m);
            mul_pow(rhs, den_[i].first, m - o.den_[j].second);
            mul_pow(lhs, den_[i].first, m - den_[i].second);
            ++i, ++j;
        }
    }
    num_ = lhs + rhs;
    den_ = std::move(lcm);
    if (num_.is_zero()) den_.clear();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        *this = RatFunc();
        return *this;
    }
    num_ *= o.num_;
    for (const auto& [f, m] : o.den_) push_den(f, m);
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw PoleError("inverse of zero rational function");
    RatFunc r(den_poly());
    r.push_den(num_, 1);
    return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

bool ratfunc_equal(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) return false;
    // cross-multiply over the shared-factor LCM: the difference is zero iff
    // the merged numerator vanishes
    LaurentPoly lhs = a.num_, rhs = b.num_;
    size_t i = 0, j = 0;
    auto apply = [](LaurentPoly& p, const LaurentPoly& f, int m) {
        if (m > 0) p *= f.pow(static_cast<unsigned>(m));
    };
    while (i < a.den_.size() || j < b.den_.size()) {
        if (j >= b.den_.size() || (i < a.den_.size() && a.den_[i].first < b.den_[j].first)) {
            apply(rhs, a.den_[i].first, a.den_[i].second);
            ++i;
        } else if (i >= a.den_.size() || b.den_[j].first < a.den_[i].first) {
            apply(lhs, b.den_[j].first, b.den_[j].second);
            ++j;
        } else {
            int c = std::min(a.den_[i].second, b.den_[j].second);
            apply(rhs, a.den_[i].first, a.den_[i].second - c);
            apply(lhs, b.den_[j].first, b.den_[j].second - c);
            ++i, ++j;
        }
    }
    return lhs == rhs;
}

RatFunc RatFunc::substituted(const SubstMap& rules) const {
    RatFunc r(num_.substituted(rules));
    for (const auto& [f, m] : den_) r.push_den(f.substituted(rules), m);
    return r;
}

void RatFunc::cancel_factors() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (size_t i = 0; i < den_.size();) {
        bool cancelled = false;
        while (den_[i].second > 0) {
            auto q = div_exact(num_, den_[i].first);
            if (!q) break;
            num_ = std::move(*q);
            --den_[i].second;
            cancelled = true;
        }
        if (den_[i].second == 0) den_.erase(den_.begin() + static_cast<long>(i));
        else ++i;
        (void)cancelled;
    }
}

void RatFunc::reduce() {
    cancel_factors();
    if (den_.empty() || num_.is_zero()) return;
    std::set<VarId> vs = num_.variables();
    LaurentPoly d = den_poly();
    for (VarId v : d.variables()) vs.insert(v);
    if (vs.size() > 2) return;
    LaurentPoly n = num_;
    if (gcd_reduce(n, d)) {
        RatFunc r(n);
        r.push_den(d, 1);
        *this = std::move(r);
    }
}

std::string RatFunc::text() const {
    if (den_.empty()) return num_.text();
    std::string s = "(" + num_.text() + ") / (";
    bool first = true;
    for (const auto& [f, m] : den_) {
        if (!first) s += "*";
        first = false;
        s += "(" + f.text() + ")";
        if (m != 1) s += "^" + std::to_string(m);
    }
    s += ")";
    return s;
}

} // namespace qv
