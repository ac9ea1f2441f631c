#include "qvertex/errors.hpp"
#include "qvertex/macdonald.hpp"
#include "qvertex/series.hpp"
#include "qvertex/vertex.hpp"

#include <doctest.h>

using namespace qv;
using namespace qv::mac;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
LaurentPoly V(VarId v, int e = 1) { return LaurentPoly::variable(v, e); }
} // namespace

TEST_CASE("power_inner displays") {
    LaurentPoly one = LaurentPoly::one();
    // <p_1, p_1> = (1-q)/(1-t)
    CHECK(ratfunc_equal(power_inner(P({1}), P({1})),
                        RatFunc::fraction(one - V(vars::q()), one - V(vars::t()))));
    // <p_2, p_2> = 2 (1-q^2)/(1-t^2)
    LaurentPoly num = (one - V(vars::q(), 2));
    num.mul_scalar(Scalar(2));
    CHECK(ratfunc_equal(power_inner(P({2}), P({2})), RatFunc::fraction(num, one - V(vars::t(), 2))));
    CHECK(power_inner(P({1, 1}), P({2})).is_zero());
}

TEST_CASE("monomial symmetric polynomials") {
    CHECK(monomial_sym_poly(P({1}), 2) == V(vars::x(1)) + V(vars::x(2)));
    CHECK(monomial_sym_poly(P({1, 1}), 2) == V(vars::x(1)) * V(vars::x(2)));
    CHECK(monomial_sym_poly(P({2, 1}), 2) ==
          V(vars::x(1), 2) * V(vars::x(2)) + V(vars::x(1)) * V(vars::x(2), 2));
    CHECK_THROWS_AS(monomial_sym(P({1, 1, 1}), 2), LengthError);
}

TEST_CASE("first Macdonald polynomials") {
    // P_(1) = m_(1), P_(1,1) = m_(1,1)
    const auto& e1 = macdonald_m_expansion(P({1}));
    CHECK(e1.size() == 1);
    const auto& e11 = macdonald_m_expansion(P({1, 1}));
    CHECK(e11.size() == 1);
    // P_(2) = m_(2) + c m_(1,1) with c = (1+q)(1-t)/(1-qt), derived by the
    // Gram-Schmidt oracle by hand:
    //   <m_2, m_11> = -(1-q^2)/(1-t^2),
    //   <m_11, m_11> = (1-q)(1-qt)/((1-t)^2 (1+t)).
    const auto& e2 = macdonald_m_expansion(P({2}));
    REQUIRE(e2.count(P({1, 1})) == 1);
    LaurentPoly one = LaurentPoly::one();
    RatFunc c_expected = RatFunc::fraction((one + V(vars::q())) * (one - V(vars::t())),
                                           one - V(vars::q()) * V(vars::t()));
    CHECK(ratfunc_equal(e2.at(P({1, 1})), c_expected));
    // and <P_(2), P_(1,1)> = 0 as the cross-check
    RatFunc inner;
    for (const auto& [t1, c1] : e2)
        for (const auto& [t2, c2] : macdonald_m_expansion(P({1, 1}))) inner += m_gram(t1, t2) * c1 * c2;
    CHECK(inner.is_zero());
}

TEST_CASE("orthogonality and unitriangularity up to weight 4") {
    for (int s = 1; s <= 4; ++s) {
        auto parts = partitions_of(s);
        for (const auto& mu : parts) {
            const auto& emu = macdonald_m_expansion(mu);
            CHECK(ratfunc_equal(emu.at(mu), RatFunc::one()));
            for (const auto& [nu, c] : emu) CHECK(dominance_leq(nu, mu));
            for (const auto& nu : parts) {
                if (nu == mu || !(nu < mu)) continue;
                RatFunc inner;
                for (const auto& [t1, c1] : emu)
                    for (const auto& [t2, c2] : macdonald_m_expansion(nu))
                        inner += m_gram(t1, t2) * c1 * c2;
                CHECK(inner.is_zero());
            }
        }
    }
}

TEST_CASE("Gram-Schmidt is independent of the linear extension") {
    for (int s = 2; s <= 4; ++s) {
        for (const auto& mu : partitions_of(s)) {
            MExpansion a = macdonald_gs_literal(mu, 0);
            MExpansion b = macdonald_gs_literal(mu, 1);
            const MExpansion& c = macdonald_m_expansion(mu);
            REQUIRE(a.size() == b.size());
            for (const auto& [nu, ca] : a) {
                CHECK(ratfunc_equal(ca, b.at(nu)));
                CHECK(ratfunc_equal(ca, c.at(nu)));
            }
        }
    }
}

TEST_CASE("macdonald_eval spec cases") {
    // P_(1) at (q^{m1}, (t/q) q^{m2}) -> q^{m1} + q^{m2} t/q with symbolic slots
    RatFunc v = macdonald_eval(P({1}),
                               {{Scalar(1), Monomial::var(vars::q(), 3)},
                                {Scalar(1), Monomial::var(vars::t()) * Monomial::var(vars::q(), 0)}},
                               {Scalar(1), Monomial::var(vars::q())}, {Scalar(1), Monomial::var(vars::t())});
    CHECK(ratfunc_equal(v, RatFunc(V(vars::q(), 3) + V(vars::t()))));
    // P_(d) at the empty-partition spectrum, k=1 -> 1
    for (int d = 0; d <= 3; ++d) {
        RatFunc one_val = macdonald_eval(P({}), spectrum_point(P({}), 1), {Scalar(1), Monomial::var(vars::q())},
                                         {Scalar(1), Monomial::var(vars::t())});
        CHECK(ratfunc_equal(one_val, RatFunc::one()));
    }
    // P_(2) at (q^2, t/q), k=2 matches direct substitution into the golden expansion
    RatFunc direct = macdonald_P(P({2}), 2)
                         .evaluated({{Scalar(1), Monomial::var(vars::q(), 2)},
                                     {Scalar(1), Monomial::var(vars::t()) * Monomial::var(vars::q(), -1)}});
    RatFunc via = macdonald_eval(P({2}), spectrum_point(P({2}), 2), {Scalar(1), Monomial::var(vars::q())},
                                 {Scalar(1), Monomial::var(vars::t())});
    CHECK(ratfunc_equal(direct, via));
}

TEST_CASE("q-binomial theorem to y-cap 4 for k <= 2") {
    for (int k = 1; k <= 2; ++k) {
        Caps caps{{Group::Kahler, 4}};
        vx::PhiProduct lhs_p;
        for (int i = 1; i <= k; ++i) {
            Monomial xi = Monomial::var(vars::x(i));
            lhs_p.push(Scalar(1), Monomial::var(vars::y()) * Monomial::var(vars::t()) * xi, 1);
            lhs_p.push(Scalar(1), Monomial::var(vars::y()) * xi, -1);
        }
        TruncatedSeries lhs = lhs_p.expand(caps);
        TruncatedSeries rhs(caps);
        for (int d = 0; d <= 4; ++d) {
            RatFunc c = (qpoch(Scalar(1), Monomial::var(vars::t()), d) *
                         qpoch(Scalar(1), Monomial::var(vars::q()), d).inverse())
                            .to_ratfunc();
            c *= macdonald_P(Partition(std::vector<int>{d}), k).as_ratfunc();
            rhs.add_term(Monomial::var(vars::y(), d), c);
        }
        CHECK(lhs.equals(rhs));
    }
}
