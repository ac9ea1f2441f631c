#include "qvertex/errors.hpp"
#include "qvertex/kappa.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/qratio.hpp"
#include "qvertex/quiver.hpp"
#include "qvertex/vertex.hpp"

#include <doctest.h>

using namespace qv;

namespace {
Monomial mono(VarId v, int e = 1) { return Monomial::var(v, e); }
} // namespace

TEST_CASE("qpoch basics") {
    Monomial x = mono(vars::z(1));
    CHECK(qpoch(Scalar(1), x, 0).to_ratfunc().is_one());
    // (x)_2 = (1-x)(1-qx)
    RatFunc p2 = qpoch(Scalar(1), x, 2).to_ratfunc();
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly want = (one - LaurentPoly::variable(vars::z(1))) *
                       (one - LaurentPoly::variable(vars::q()) * LaurentPoly::variable(vars::z(1)));
    CHECK(ratfunc_equal(p2, RatFunc(want)));
    // (x)_{-1} = 1/(1 - x/q)
    RatFunc pm1 = qpoch(Scalar(1), x, -1).to_ratfunc();
    RatFunc want_m1 = RatFunc::fraction(
        one, one - LaurentPoly::variable(vars::z(1)) * LaurentPoly::variable(vars::q(), -1));
    CHECK(ratfunc_equal(pm1, want_m1));
}

TEST_CASE("Pochhammer cocycle (x)_{m+n} = (x)_m (x q^m)_n for m,n in [-3,3]") {
    Monomial x = mono(vars::z(1));
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            QRatio lhs = qpoch(Scalar(1), x, m + n);
            QRatio rhs = qpoch(Scalar(1), x, m) * qpoch(Scalar(1), x * mono(vars::q(), m), n);
            CHECK(qratio_equal(lhs, rhs));
        }
}

TEST_CASE("qfactor_ratio zero and pole bookkeeping") {
    // (hbar^0)_2 / (q hbar^-1)_2: numerator has the zero factor (1-1)
    RatFunc z = qfactor_ratio({qpoch(Scalar(1), Monomial{}, 2)},
                              {qpoch(Scalar(1), mono(vars::q()) * mono(vars::hbar(), -1), 2)});
    CHECK(z.is_zero());
    // (hbar)_1/(q)_1 = (1-hbar)/(1-q)
    RatFunc r = qfactor_ratio({qpoch(Scalar(1), mono(vars::hbar()), 1)},
                              {qpoch(Scalar(1), mono(vars::q()), 1)});
    RatFunc want = RatFunc::fraction(LaurentPoly::one() - LaurentPoly::variable(vars::hbar()),
                                     LaurentPoly::one() - LaurentPoly::variable(vars::q()));
    CHECK(ratfunc_equal(r, want));
    // negative indices: (1)_{-2} / (q hbar^-1)_{-2} is finite and nonzero
    RatFunc neg = qfactor_ratio({qpoch(Scalar(1), Monomial{}, -2)},
                                {qpoch(Scalar(1), mono(vars::q()) * mono(vars::hbar(), -1), -2)});
    CHECK(!neg.is_zero());
    // derived oracle: expand both negative-index products directly
    //   (1)_{-2} = 1/((1-q^-1)(1-q^-2)),  (q/h)_{-2} = 1/((1-h^-1)(1-q^-1 h^-1))
    LaurentPoly one = LaurentPoly::one();
    auto lin = [&](Scalar c, Monomial m) { return one - LaurentPoly::term(c, m); };
    RatFunc oracle = RatFunc::fraction(lin(Scalar(1), mono(vars::hbar(), -1)) *
                                           lin(Scalar(1), mono(vars::q(), -1) * mono(vars::hbar(), -1)),
                                       lin(Scalar(1), mono(vars::q(), -1)) *
                                           lin(Scalar(1), mono(vars::q(), -2)));
    CHECK(ratfunc_equal(neg, oracle));
    // a genuine uncancelled pole raises the alarm
    CHECK_THROWS_AS(qfactor_ratio({}, {qpoch(Scalar(1), Monomial{}, 2)}), PoleError);
}

TEST_CASE("partition combinatorics: contents and hooks") {
    Partition l22(std::vector<int>{2, 2});
    CHECK(content(l22, {1, 2}) == 1);
    CHECK(content(l22, {2, 1}) == 3);
    CHECK(content(Partition(std::vector<int>{1}), {1, 1}) == 1);
    CHECK_THROWS_AS(content(l22, {3, 1}), CellOutOfRange);

    auto h = hook(l22, {1, 1});
    CHECK(h == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(hook(l22, {2, 2}) == std::vector<Cell>{{2, 2}});
    CHECK(hook(Partition(std::vector<int>{3}), {1, 2}) == std::vector<Cell>{{1, 2}, {1, 3}});
}

TEST_CASE("X_lambda dimension vector matches the dual quiver for rectangles") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            QuiverA a = QuiverA::from_partition(Partition::rectangle(n - k, k));
            QuiverA b = QuiverA::dual_grassmannian(k, n);
            CHECK(a.v == b.v);
        }
}

TEST_CASE("zbox values for small partitions") {
    // lambda = (1): z_box = z_1 (sigma vanishes at the framing node)
    Partition l1(std::vector<int>{1});
    CHECK(zbox(l1, {1, 1}) == mono(vars::z(1)));

    Partition l22(std::vector<int>{2, 2});
    // sigma = -1, 0, +1 across contents 1,2,3
    CHECK(sigma_lambda(l22, 1) == -1);
    CHECK(sigma_lambda(l22, 2) == 0);
    CHECK(sigma_lambda(l22, 3) == 1);
    CHECK(zbox(l22, {1, 1}) == mono(vars::z(1)) * mono(vars::z(2)) * mono(vars::z(3)));
    CHECK(zbox(l22, {2, 2}) == mono(vars::z(2)));
}

TEST_CASE("partition parse/print") {
    CHECK(Partition::parse("3,3,1").text() == "3,3,1");
    CHECK(Partition::parse("0").empty());
    CHECK(Partition::parse("").empty());
    CHECK_THROWS(Partition::parse("1,2"));
}

TEST_CASE("dominance order") {
    Partition a(std::vector<int>{3, 1}), b(std::vector<int>{2, 2}), c(std::vector<int>{2, 1, 1});
    CHECK(dominance_leq(b, a));
    CHECK(!dominance_leq(a, b));
    CHECK(dominance_leq(c, b));
    CHECK(dominance_leq(c, a));
    CHECK(!dominance_leq(a, c));
}
