#pragma once

#include "qvertex/ratfunc.hpp"

#include <vector>

namespace qv {

/// One q-Pochhammer style linear factor (1 - c*m), oriented so that the
/// monomial m is larger than 1 in the canonical order.
struct QFactor {
    Scalar c;
    Monomial m;

    friend bool operator==(const QFactor& a, const QFactor& b) { return a.c == b.c && a.m == b.m; }
    friend bool operator<(const QFactor& a, const QFactor& b) {
        int cm = Monomial::cmp(a.m, b.m);
        if (cm != 0) return cm < 0;
        return a.c < b.c;
    }
};

/// Product of a unit (scalar times monomial) with signed powers of linear
/// factors (1 - c*m). Identically-zero factors (c*m = 1) are tracked by net
/// multiplicity instead of being multiplied out, so a summand that vanishes
/// is detected exactly and an uncancelled pole is a loud error rather than a
/// division by zero.
class QRatio {
public:
    QRatio() = default; // the constant 1

    static QRatio unit(const Scalar& c, const Monomial& m = {}) {
        QRatio r;
        r.unit_c_ = c;
        r.unit_m_ = m;
        return r;
    }

    bool is_zero() const { return zero_net_ > 0; }
    bool has_pole() const { return zero_net_ < 0; }
    int zero_net() const { return zero_net_; }

    const Scalar& unit_scalar() const { return unit_c_; }
    const Monomial& unit_monomial() const { return unit_m_; }
    const std::vector<std::pair<QFactor, int>>& factors() const { return f_; }

    /// Multiply by (1 - c*m)^mult.
    void push(const Scalar& c, const Monomial& m, int mult);
    void mul_unit(const Scalar& c, const Monomial& m = {});

    QRatio& operator*=(const QRatio& o);
    friend QRatio operator*(QRatio a, const QRatio& b) { return a *= b; }
    QRatio pow(int n) const;
    QRatio inverse() const { return pow(-1); }

    QRatio substituted(const SubstMap& rules) const;

    /// Exact conversion; a zero QRatio becomes the zero RatFunc, a net pole
    /// throws PoleError.
    RatFunc to_ratfunc() const;

    std::string text() const;

private:
    Scalar unit_c_{1};
    Monomial unit_m_;
    std::vector<std::pair<QFactor, int>> f_; // sorted by QFactor, mult != 0
    int zero_net_ = 0;
};

/// (x ; q)_n for x = c*m, with the negative-index extension fixed by the
/// cocycle identity (x)_{m+n} = (x)_m (x q^m)_n.
QRatio qpoch(const Scalar& c, const Monomial& m, int n);
inline QRatio qpoch(const Monomial& m, int n) { return qpoch(Scalar(1), m, n); }

/// Merge Pochhammer factor lists into an exact rational function. The zero
/// RatFunc signals an exactly vanishing summand; an uncancelled zero in the
/// denominator throws PoleError.
RatFunc qfactor_ratio(const std::vector<QRatio>& num, const std::vector<QRatio>& den);

bool qratio_equal(const QRatio& a, const QRatio& b);

} // namespace qv
