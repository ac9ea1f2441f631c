#include "qvertex/gcd.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <vector>

namespace qv {
namespace {

// Dense univariate polynomial over Scalar, low degree first, no leading zeros.
using UV = std::vector<Scalar>;

void uv_trim(UV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int uv_deg(const UV& a) { return static_cast<int>(a.size()) - 1; }

UV uv_sub(const UV& a, const UV& b) {
    UV r(std::max(a.size(), b.size()), Scalar(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    uv_trim(r);
    return r;
}

UV uv_mul(const UV& a, const UV& b) {
    if (a.empty() || b.empty()) return {};
    UV r(a.size() + b.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    uv_trim(r);
    return r;
}

UV uv_divexact(UV a, const UV& b) {
    assert(!b.empty());
    UV q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Scalar(0));
    while (uv_deg(a) >= uv_deg(b)) {
        Scalar f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        uv_trim(a);
        if (a.empty()) break;
    }
    assert(a.empty());
    uv_trim(q);
    return q;
}

// Scale to an integer vector with content 1 and positive leading coefficient;
// coefficient swell stays bounded this way.
void uv_make_primitive(UV& a) {
    if (a.empty()) return;
    mpz_class den_lcm(1);
    for (const auto& c : a) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_class num_gcd(0);
    for (auto& c : a) {
        c *= den_lcm;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    if (num_gcd == 0) return;
    if (a.back() < 0) num_gcd = -num_gcd;
    Scalar g(num_gcd);
    for (auto& c : a) c /= g;
}

// primitive pseudo-remainder sequence over Z
UV uv_gcd(UV a, UV b) {
    uv_trim(a);
    uv_trim(b);
    if (a.empty()) {
        uv_make_primitive(b);
        return b;
    }
    if (b.empty()) {
        uv_make_primitive(a);
        return a;
    }
    uv_make_primitive(a);
    uv_make_primitive(b);
    if (uv_deg(a) < uv_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        // pseudo-remainder: lc(b)^{da-db+1} * a reduced by b
        UV r = a;
        while (uv_deg(r) >= uv_deg(b) && !r.empty()) {
            Scalar lr = r.back();
            size_t off = r.size() - b.size();
            for (auto& c : r) c *= b.back();
            for (size_t i = 0; i < b.size(); ++i) r[off + i] -= lr * b[i];
            uv_trim(r);
        }
        uv_make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    uv_make_primitive(a);
    return a;
}

// Dense bivariate: coefficient of main^i is a UV in the secondary variable.
using BV = std::vector<UV>;

void bv_trim(BV& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

int bv_deg(const BV& a) { return static_cast<int>(a.size()) - 1; }

bool bv_zero(const BV& a) { return a.empty(); }

BV bv_sub(const BV& a, const BV& b) {
    BV r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = uv_sub(r[i], b[i]);
    bv_trim(r);
    return r;
}

BV bv_mul_uv(const BV& a, const UV& c) {
    BV r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = uv_mul(a[i], c);
    bv_trim(r);
    return r;
}

BV bv_shift_mul(const BV& a, const UV& c, size_t shift) {
    BV r(a.size() + shift);
    for (size_t i = 0; i < a.size(); ++i) r[i + shift] = uv_mul(a[i], c);
    bv_trim(r);
    return r;
}

UV bv_content(const BV& a) {
    UV g;
    for (const auto& c : a)
        if (!c.empty()) g = uv_gcd(g, c);
    return g;
}

BV bv_pp(const BV& a) {
    UV c = bv_content(a);
    if (c.empty()) return {};
    BV r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].empty() ? UV{} : uv_divexact(a[i], c);
    return r;
}

// pseudo-remainder of a by b in the main variable
BV bv_prem(BV a, const BV& b) {
    assert(!bv_zero(b));
    const UV& lb = b.back();
    while (bv_deg(a) >= bv_deg(b)) {
        size_t off = a.size() - b.size();
        UV la = a.back();
        // a := a*lb - la*main_shift(b)
        a = bv_sub(bv_mul_uv(a, lb), bv_shift_mul(b, la, off));
        if (static_cast<int>(a.size()) > bv_deg(b) + static_cast<int>(off) &&
            !a.empty() && a.size() - 1 == off + b.size() - 1) {
            // leading term must have cancelled
        }
        bv_trim(a);
        if (bv_zero(a)) break;
    }
    return a;
}

BV bv_gcd(BV a, BV b) {
    bv_trim(a);
    bv_trim(b);
    if (bv_zero(a)) return b;
    if (bv_zero(b)) return a;
    UV ca = bv_content(a), cb = bv_content(b);
    UV cg = uv_gcd(ca, cb);
    a = bv_pp(a);
    b = bv_pp(b);
    if (bv_deg(a) < bv_deg(b)) std::swap(a, b);
    while (!bv_zero(b)) {
        BV r = bv_prem(a, b);
        a = std::move(b);
        b = bv_pp(r);
    }
    return bv_mul_uv(a, cg);
}

BV to_bv(const LaurentPoly& p, VarId main, VarId sec) {
    BV r;
    for (const auto& [m, c] : p.terms()) {
        int em = m.exponent(main), es = m.exponent(sec);
        assert(em >= 0 && es >= 0);
        if (static_cast<size_t>(em) >= r.size()) r.resize(static_cast<size_t>(em) + 1);
        UV& uv = r[static_cast<size_t>(em)];
        if (static_cast<size_t>(es) >= uv.size()) uv.resize(static_cast<size_t>(es) + 1, Scalar(0));
        uv[static_cast<size_t>(es)] += c;
    }
    for (auto& uv : r) uv_trim(uv);
    bv_trim(r);
    return r;
}

LaurentPoly from_bv(const BV& p, VarId main, VarId sec) {
    LaurentPoly out;
    std::vector<LaurentPoly::Term> terms;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0)
                out += LaurentPoly::term(p[i][j], Monomial::var(main, static_cast<int>(i)) *
                                                      Monomial::var(sec, static_cast<int>(j)));
    return out;
}

} // namespace

bool gcd_reduce(LaurentPoly& num, LaurentPoly& den) {
    if (num.is_zero() || den.is_zero()) return false;
    std::set<VarId> vs = num.variables();
    for (VarId v : den.variables()) vs.insert(v);
    if (vs.size() > 2) return false;
    if (vs.empty()) return false;

    Monomial cn = num.monomial_content(), cd = den.monomial_content();
    LaurentPoly pn = num, pd = den;
    pn.mul_monomial(cn.inverse());
    pd.mul_monomial(cd.inverse());

    LaurentPoly g;
    if (vs.size() == 1) {
        VarId v = *vs.begin();
        UV a = {}, b = {};
        for (const auto& [m, c] : pn.terms()) {
            size_t e = static_cast<size_t>(m.exponent(v));
            if (e >= a.size()) a.resize(e + 1, Scalar(0));
            a[e] += c;
        }
        for (const auto& [m, c] : pd.terms()) {
            size_t e = static_cast<size_t>(m.exponent(v));
            if (e >= b.size()) b.resize(e + 1, Scalar(0));
            b[e] += c;
        }
        UV gg = uv_gcd(a, b);
        if (uv_deg(gg) <= 0) return false;
        LaurentPoly gp;
        for (size_t i = 0; i < gg.size(); ++i)
            if (gg[i] != 0) gp += LaurentPoly::term(gg[i], Monomial::var(v, static_cast<int>(i)));
        g = gp;
    } else {
        auto it = vs.begin();
        VarId v1 = *it++;
        VarId v2 = *it;
        BV a = to_bv(pn, v1, v2), b = to_bv(pd, v1, v2);
        BV gg = bv_gcd(a, b);
        if (bv_deg(gg) <= 0 && (gg.empty() || uv_deg(gg[0]) <= 0)) return false;
        g = from_bv(gg, v1, v2);
    }
    auto qn = div_exact(pn, g);
    auto qd = div_exact(pd, g);
    if (!qn || !qd) return false; // should not happen; stay safe
    num = *qn;
    num.mul_monomial(cn);
    den = *qd;
    den.mul_monomial(cd);
    return true;
}

} // namespace qv
