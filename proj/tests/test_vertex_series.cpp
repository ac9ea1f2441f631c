#include "qvertex/checks.hpp"
#include "qvertex/errors.hpp"
#include "qvertex/vertex.hpp"

#include <doctest.h>

using namespace qv;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
} // namespace

TEST_CASE("vertex_X constant term and z^1 coefficient for (1,2)") {
    Caps caps{{Group::Kahler, 2}};
    TruncatedSeries s = vx::vertex_x_series(1, 2, caps);
    CHECK(ratfunc_equal(s.coefficient(Monomial{}), RatFunc::one()));
    // (1-hbar)(1-hbar a2/a1) / ((1-q)(1-q a2/a1))
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly a21 = LaurentPoly::variable(vars::a(2)) * LaurentPoly::variable(vars::a(1), -1);
    RatFunc want = RatFunc::fraction((one - LaurentPoly::variable(vars::hbar())) *
                                         (one - LaurentPoly::variable(vars::hbar()) * a21),
                                     (one - LaurentPoly::variable(vars::q())) *
                                         (one - LaurentPoly::variable(vars::q()) * a21));
    CHECK(ratfunc_equal(s.coefficient(Monomial::var(vars::z())), want));
}

TEST_CASE("vertex_X (2,4) z^1 coefficient is the two-composition sum") {
    auto summands = vx::vertex_x_summands(2, 4, 1);
    RatFunc total;
    total += summands.at({1, 0}).to_ratfunc();
    total += summands.at({0, 1}).to_ratfunc();
    Caps caps{{Group::Kahler, 1}};
    TruncatedSeries s = vx::vertex_x_series(2, 4, caps);
    CHECK(ratfunc_equal(s.coefficient(Monomial::var(vars::z())), total));
}

TEST_CASE("vertex_xlambda for the single box is the q-binomial series") {
    Caps caps{{Group::Kahler, 4}};
    TruncatedSeries s = vx::vertex_xlambda(P({1}), caps);
    for (int d = 0; d <= 4; ++d) {
        RatFunc want = (qpoch(Scalar(1), Monomial::var(vars::hbar_dual()), d) *
                        qpoch(Scalar(1), Monomial::var(vars::q()), d).inverse())
                           .to_ratfunc();
        CHECK(ratfunc_equal(s.coefficient(Monomial::var(vars::z(1), d)), want));
    }
    // with tau = x^1 every summand picks up q^d
    mac::SymPoly tau = mac::monomial_sym(P({1}), 1);
    TruncatedSeries st = vx::vertex_xlambda(P({1}), caps, &tau, 1);
    for (int d = 0; d <= 4; ++d) {
        RatFunc want = (qpoch(Scalar(1), Monomial::var(vars::hbar_dual()), d) *
                        qpoch(Scalar(1), Monomial::var(vars::q()), d).inverse())
                           .to_ratfunc();
        want.mul_monomial(Monomial::var(vars::q(), d));
        CHECK(ratfunc_equal(st.coefficient(Monomial::var(vars::z(1), d)), want));
    }
}

TEST_CASE("verpoint: sum form equals product form") {
    for (const char* lt : {"1", "2", "1,1", "2,2"}) {
        CheckReport r = checks::check_verpoint(Partition::parse(lt), 3);
        INFO(lt, ": ", r.to_text());
        CHECK(r.passed());
    }
    // empty partition: both sides are 1
    Caps caps{{Group::Kahler, 2}};
    CHECK(vx::vertex_xlambda(P({}), caps).equals(vx::vertex_product(P({})).expand(caps)));
}

TEST_CASE("prefactor identities") {
    // k=1: prefactor_X = phi(z)/phi(hbar z)
    Caps caps{{Group::Kahler, 3}};
    vx::PhiProduct p = vx::prefactor_x(1);
    REQUIRE(p.args().size() == 2);
    TruncatedSeries s = p.expand(caps);
    vx::PhiProduct direct;
    direct.push(Scalar(1), Monomial::var(vars::z()), 1);
    direct.push(Scalar(1), Monomial::var(vars::hbar()) * Monomial::var(vars::z()), -1);
    CHECK(s.equals(direct.expand(caps)));
}

TEST_CASE("phi-product expansion matches the Pochhammer-ratio series") {
    // phi(hbar_dual z_1)/phi(z_1) = sum_d (hbar_dual)_d/(q)_d z_1^d
    Caps caps{{Group::Kahler, 4}};
    vx::PhiProduct p;
    p.push(Scalar(1), Monomial::var(vars::hbar_dual()) * Monomial::var(vars::z(1)), 1);
    p.push(Scalar(1), Monomial::var(vars::z(1)), -1);
    TruncatedSeries s = p.expand(caps);
    for (int d = 0; d <= 4; ++d) {
        RatFunc want = (qpoch(Scalar(1), Monomial::var(vars::hbar_dual()), d) *
                        qpoch(Scalar(1), Monomial::var(vars::q()), d).inverse())
                           .to_ratfunc();
        CHECK(ratfunc_equal(s.coefficient(Monomial::var(vars::z(1), d)), want));
    }
}

TEST_CASE("vertex_xdual (1,2) equals the double Pochhammer ratio series") {
    Caps caps{{Group::Kahler, 3}, {Group::Ratio, 3}};
    TruncatedSeries s = vx::vertex_xdual(1, 2, caps);
    // sum_d (hb)_d (hb u)_d / ((q)_d (q u)_d) z_1^d, u-expanded
    TruncatedSeries want(caps);
    Monomial hb = Monomial::var(vars::hbar_dual());
    Monomial uu = Monomial::var(vars::u());
    for (int d = 0; d <= 3; ++d) {
        QRatio c = qpoch(Scalar(1), hb, d) * qpoch(Scalar(1), Monomial::var(vars::q()), d).inverse() *
                   qpoch(Scalar(1), hb * uu, d) * qpoch(Scalar(1), Monomial::var(vars::q()) * uu, d).inverse();
        TruncatedSeries part = series_expand(c.to_ratfunc(), Group::Ratio, caps);
        part.mul_term(Monomial::var(vars::z(1), d), RatFunc::one());
        want += part;
    }
    CHECK(s.equals(want));
}

TEST_CASE("out-of-cone summands vanish without pole alarms") {
    CheckReport r = checks::check_cone(50, 123u);
    INFO(r.to_text());
    CHECK(r.passed());
}

TEST_CASE("reducetopoint at (1,2)") {
    CheckReport r = checks::check_reduce(1, 2, 2, 2);
    INFO(r.to_text());
    CHECK(r.passed());
}
