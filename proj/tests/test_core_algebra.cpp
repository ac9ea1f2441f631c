#include "qvertex/errors.hpp"
#include "qvertex/poly.hpp"
#include "qvertex/ratfunc.hpp"
#include "qvertex/series.hpp"

#include <doctest.h>

#include <random>

using namespace qv;

namespace {

LaurentPoly X(VarId v, int e = 1) { return LaurentPoly::variable(v, e); }

// small random Laurent polynomials over a fixed variable set
LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), coeff(-4, 4), expo(-2, 3);
    VarId vs[] = {vars::q(), vars::hbar(), vars::z(1)};
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m;
        for (VarId v : vs) {
            int e = expo(rng);
            if (e > 1) m *= Monomial::var(v, e - 1); // skew toward small exponents
        }
        int c = coeff(rng);
        if (c != 0) p += LaurentPoly::term(Scalar(c), m);
    }
    return p;
}

} // namespace

TEST_CASE("polynomial ring laws on randomized triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a - a == LaurentPoly{});
    }
}

TEST_CASE("poly_mul spec examples") {
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly x = X(vars::z(1));
    LaurentPoly q = X(vars::q());
    // (1 - x)(1 - qx) = 1 - x - qx + qx^2
    LaurentPoly got = (one - x) * (one - q * x);
    LaurentPoly want = one - x - q * x + q * x * x;
    CHECK(got == want);
    std::mt19937 rng(3);
    LaurentPoly p = random_poly(rng);
    CHECK(p * one == p);
    CHECK((x - x) * p == LaurentPoly{});
}

TEST_CASE("canonical serialization round-trips") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly p = random_poly(rng);
        std::string s = p.text();
        CHECK(LaurentPoly::parse(s).text() == s);
    }
    CHECK(LaurentPoly::parse("0").is_zero());
    // graded order puts the degree -1 term first
    CHECK(LaurentPoly::parse("1 - q*z_1^2 + 3/2*hbar^-1").text() == "3/2*hbar^-1 + 1 - q*z_1^2");
}

TEST_CASE("ratfunc equality by cross-multiplication") {
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly q = X(vars::q());
    // (1-q^2)/(1-q) == (1+q)/1
    RatFunc a = RatFunc::fraction(one - q * q, one - q);
    RatFunc b(one + q);
    CHECK(ratfunc_equal(a, b));
    // x/y != y/x
    RatFunc c = RatFunc::fraction(X(vars::z(1)), X(vars::z(2)));
    RatFunc d = RatFunc::fraction(X(vars::z(2)), X(vars::z(1)));
    CHECK(!ratfunc_equal(c, d));
    // common-factor invariance
    LaurentPoly t = X(vars::t());
    LaurentPoly num = (one - t) * (one + q);
    LaurentPoly den = one - q * t;
    LaurentPoly scale = one - X(vars::z(1));
    CHECK(ratfunc_equal(RatFunc::fraction(num, den), RatFunc::fraction(num * scale, den * scale)));
}

TEST_CASE("ratfunc arithmetic and reduce") {
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly q = X(vars::q());
    RatFunc half = RatFunc::fraction(one, one - q);
    RatFunc sum = half + half;
    RatFunc expect = RatFunc::fraction(LaurentPoly::from_scalar(Scalar(2)), one - q);
    CHECK(ratfunc_equal(sum, expect));
    RatFunc prod = half * RatFunc(one - q);
    CHECK(prod.is_one());
    // gcd reduction in two variables
    LaurentPoly t = X(vars::t());
    RatFunc f = RatFunc::fraction((one - q * t) * (one - q), (one - q * t) * (one - t));
    f.reduce();
    CHECK(ratfunc_equal(f, RatFunc::fraction(one - q, one - t)));
    CHECK(f.den_poly() == one - t);
}

TEST_CASE("series_expand geometric examples") {
    LaurentPoly one = LaurentPoly::one();
    Caps caps{{Group::Ratio, 3}};
    // 1/(1-r) to cap 3
    RatFunc f = RatFunc::fraction(one, one - X(vars::r(1)));
    TruncatedSeries s = series_expand(f, Group::Ratio, caps);
    TruncatedSeries want(caps);
    for (int j = 0; j <= 3; ++j) want.add_term(Monomial::var(vars::r(1), j), RatFunc::one());
    CHECK(s.equals(want));

    // (1-hbar r)/(1-q r) to cap 2: 1 + (q-hbar) r + q(q-hbar) r^2
    Caps caps2{{Group::Ratio, 2}};
    RatFunc g = RatFunc::fraction(one - X(vars::hbar()) * X(vars::r(1)), one - X(vars::q()) * X(vars::r(1)));
    TruncatedSeries sg = series_expand(g, Group::Ratio, caps2);
    TruncatedSeries wg(caps2);
    LaurentPoly qmh = X(vars::q()) - X(vars::hbar());
    wg.add_term(Monomial{}, RatFunc::one());
    wg.add_term(Monomial::var(vars::r(1)), RatFunc(qmh));
    wg.add_term(Monomial::var(vars::r(1), 2), RatFunc(X(vars::q()) * qmh));
    CHECK(sg.equals(wg));

    // 1/(r_1 - r_2) has no expansion at the origin
    RatFunc h = RatFunc::fraction(one, X(vars::r(1)) - X(vars::r(2)));
    CHECK_THROWS_AS(series_expand(h, Group::Ratio, caps), NonExpandablePole);
}

TEST_CASE("series_expand round-trip: s * den == num up to caps") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> pick(0, 2), cf(1, 3);
    LaurentPoly one = LaurentPoly::one();
    Caps caps{{Group::Ratio, 4}};
    for (int trial = 0; trial < 25; ++trial) {
        // denominator: product of (1 - c * q^a * r_i) factors
        RatFunc f(one + LaurentPoly::term(Scalar(cf(rng)), Monomial::var(vars::r(1), pick(rng))));
        LaurentPoly den = one;
        for (int i = 0; i < 2; ++i) {
            LaurentPoly fac =
                one - LaurentPoly::term(Scalar(cf(rng)), Monomial::var(vars::q(), pick(rng)) *
                                                             Monomial::var(vars::r(1 + pick(rng) % 2)));
            den = den * fac;
            f = f * RatFunc::fraction(one, fac);
        }
        TruncatedSeries s = series_expand(f, Group::Ratio, caps);
        TruncatedSeries denS(caps);
        for (const auto& [m, c] : den.terms()) denS.add_term(m, RatFunc(c));
        TruncatedSeries lhs = s * denS;
        TruncatedSeries rhs(caps);
        for (const auto& [m, c] : f.num().terms()) rhs.add_term(m, RatFunc(c));
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("series_substitute is a ring homomorphism") {
    std::mt19937 rng(37);
    Caps caps{{Group::Kahler, 4}, {Group::Ratio, 4}};
    SubstMap rules;
    rules[vars::z(1)] = {Scalar(1), Monomial::var(vars::hbar()) * Monomial::var(vars::r(1))};
    for (int trial = 0; trial < 25; ++trial) {
        LaurentPoly pa = random_poly(rng), pb = random_poly(rng);
        // keep z_1 exponents nonnegative so the image stays inside the caps
        TruncatedSeries a(caps), b(caps);
        for (const auto& [m, c] : pa.terms()) a.add_term(m.pow(2), RatFunc(c * c + 1));
        for (const auto& [m, c] : pb.terms()) b.add_term(m.pow(2), RatFunc(c * c + 1));
        TruncatedSeries lhs = (a * b).substituted(rules, caps);
        TruncatedSeries rhs = a.substituted(rules, caps) * b.substituted(rules, caps);
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("series_substitute spec examples") {
    Caps caps{{Group::Kahler, 2}};
    Caps rcaps{{Group::Ratio, 2}};
    // z_1 -> hbar a_2/a_1 sends 1 + z_1 to 1 + hbar r_1
    TruncatedSeries s(caps);
    s.add_term(Monomial{}, RatFunc::one());
    s.add_term(Monomial::var(vars::z(1)), RatFunc::one());
    SubstMap rules;
    rules[vars::z(1)] = {Scalar(1), Monomial::var(vars::hbar()) * Monomial::var(vars::r(1))};
    TruncatedSeries got = s.substituted(rules, rcaps);
    TruncatedSeries want(rcaps);
    want.add_term(Monomial{}, RatFunc::one());
    want.add_term(Monomial::var(vars::r(1)),
                  RatFunc(LaurentPoly::variable(vars::hbar())));
    CHECK(got.equals(want));

    // identity substitution
    CHECK(s.substituted({}, caps).equals(s));

    // hbar_dual -> q/hbar in (1 - hbar_dual)
    TruncatedSeries t(caps);
    t.add_term(Monomial{}, RatFunc(LaurentPoly::one() - LaurentPoly::variable(vars::hbar_dual())));
    SubstMap kap;
    kap[vars::hbar_dual()] = {Scalar(1), Monomial::var(vars::q()) * Monomial::var(vars::hbar(), -1)};
    TruncatedSeries tk = t.substituted(kap, caps);
    LaurentPoly want_c = LaurentPoly::one() -
                         LaurentPoly::variable(vars::q()) * LaurentPoly::variable(vars::hbar(), -1);
    CHECK(ratfunc_equal(tk.coefficient(Monomial{}), RatFunc(want_c)));
}

TEST_CASE("series inversion") {
    Caps caps{{Group::Kahler, 3}};
    TruncatedSeries s(caps);
    s.add_term(Monomial{}, RatFunc::one());
    s.add_term(Monomial::var(vars::z(1)), RatFunc(LaurentPoly::variable(vars::q())));
    TruncatedSeries inv = s.inverted();
    CHECK((s * inv).equals(TruncatedSeries::one(caps)));
}

TEST_CASE("phi_truncated termination guard") {
    Caps caps{{Group::Kahler, 2}};
    CHECK_THROWS_AS(phi_truncated(Scalar(1), Monomial{}, caps), NonTruncating);
    CHECK_THROWS_AS(phi_truncated(Scalar(1), Monomial::var(vars::q()), caps), NonTruncating);
    // phi(q y) / phi(y) = sum_d (q)_d/(q)_d y^d ... sanity: phi(ty)/phi(y) at t=q
    TruncatedSeries num = phi_truncated(Scalar(1), Monomial::var(vars::q()) * Monomial::var(vars::y()), caps);
    CHECK(!num.is_zero());
}
