#pragma once

#include "qvertex/qratio.hpp"

#include <map>
#include <vector>

namespace qv {

/// q-difference operator on functions of x_1..x_k: a finite sum of
/// rational-function coefficients times multi-index q-shifts p^d, where
/// p_i : x_j -> q^{delta_ij} x_j. Coefficients are kept as lists of QRatio
/// summands; equality merges equal shifts and compares exact RatFuncs.
class ShiftOperator {
public:
    explicit ShiftOperator(int k) : k_(k) {}
    static ShiftOperator identity(int k);

    int k() const { return k_; }
    const std::map<std::vector<int>, std::vector<QRatio>>& terms() const { return t_; }

    void add_term(std::vector<int> shift, QRatio coeff);
    RatFunc coefficient(const std::vector<int>& shift) const;

    ShiftOperator& operator+=(const ShiftOperator& o);
    friend ShiftOperator operator-(ShiftOperator a, const ShiftOperator& b);

    std::string text() const;

private:
    int k_;
    std::map<std::vector<int>, std::vector<QRatio>> t_;
};

/// All weak compositions of d into k nonnegative parts, lexicographic.
std::vector<std::vector<int>> compositions_of(int d, int k);

/// The paper's operator family: for each composition (d_1..d_k) of d the
/// coefficient is
///   prod_{i,j} (t x_j/x_i)_{d_j}/(q x_j/x_i)_{d_j}
///            * (q x_j/x_i)_{d_j-d_i}/(t x_j/x_i)_{d_j-d_i}.
ShiftOperator op_D(int d, int k);
QRatio op_D_term(const std::vector<int>& comp);

/// The same coefficient in the rewritten form of the elementary-manipulation
/// lemma; must agree with op_D_term composition by composition.
QRatio op_D_term_rewritten(const std::vector<int>& comp);

/// Noumi's operators (Macdonald operators of row type):
///   prod_{i,j} (t x_j/x_i)_{d_j}/(q x_j/x_i)_{d_j}
///   * prod_{i<j} (q^{d_j}x_j - q^{d_i}x_i)/(x_j - x_i).
ShiftOperator op_N(int d, int k);

/// Apply to a rational function of (x, q, t); linear, exact.
RatFunc apply(const ShiftOperator& op, const RatFunc& f);

/// Operator product: apply(compose(a,b), f) = apply(a, apply(b, f)).
ShiftOperator compose(const ShiftOperator& a, const ShiftOperator& b);

bool op_equal(const ShiftOperator& a, const ShiftOperator& b);

} // namespace qv
