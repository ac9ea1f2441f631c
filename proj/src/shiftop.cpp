#include "qvertex/shiftop.hpp"

#include "qvertex/errors.hpp"

namespace qv {

ShiftOperator ShiftOperator::identity(int k) {
    ShiftOperator op(k);
    op.add_term(std::vector<int>(static_cast<size_t>(k), 0), QRatio{});
    return op;
}

void ShiftOperator::add_term(std::vector<int> shift, QRatio coeff) {
    if (static_cast<int>(shift.size()) != k_) throw UsageError("shift vector length mismatch");
    if (coeff.is_zero()) return;
    t_[std::move(shift)].push_back(std::move(coeff));
}

RatFunc ShiftOperator::coefficient(const std::vector<int>& shift) const {
    auto it = t_.find(shift);
    if (it == t_.end()) return RatFunc();
    RatFunc r;
    for (const QRatio& c : it->second) r += c.to_ratfunc();
    return r;
}

ShiftOperator& ShiftOperator::operator+=(const ShiftOperator& o) {
    if (o.k_ != k_) throw UsageError("operator variable counts differ");
    for (const auto& [s, cs] : o.t_)
        for (const QRatio& c : cs) t_[s].push_back(c);
    return *this;
}

ShiftOperator operator-(ShiftOperator a, const ShiftOperator& b) {
    if (a.k_ != b.k_) throw UsageError("operator variable counts differ");
    for (const auto& [s, cs] : b.t_)
        for (const QRatio& c : cs) {
            QRatio neg = c;
            neg.mul_unit(Scalar(-1));
            a.t_[s].push_back(neg);
        }
    return a;
}

std::string ShiftOperator::text() const {
    std::string s;
    for (const auto& [shift, cs] : t_) {
        if (!s.empty()) s += "\n";
        s += "p^(";
        for (size_t i = 0; i < shift.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(shift[i]);
        }
        s += ") : " + coefficient(shift).text();
    }
    if (s.empty()) s = "0";
    return s;
}

std::vector<std::vector<int>> compositions_of(int d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == k - 1) {
            cur[static_cast<size_t>(pos)] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rem - v);
        }
    };
    if (k >= 1) rec(rec, 0, d);
    return out;
}

namespace {

Monomial x_ratio(int j, int i) {
    return Monomial::var(vars::x(j)) * Monomial::var(vars::x(i), -1);
}

} // namespace

QRatio op_D_term(const std::vector<int>& comp) {
    int k = static_cast<int>(comp.size());
    Monomial t = Monomial::var(vars::t());
    Monomial q = Monomial::var(vars::q());
    QRatio c;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            int dj = comp[static_cast<size_t>(j - 1)];
            int di = comp[static_cast<size_t>(i - 1)];
            Monomial xji = x_ratio(j, i);
            c *= qpoch(Scalar(1), t * xji, dj);
            c *= qpoch(Scalar(1), q * xji, dj).inverse();
            c *= qpoch(Scalar(1), q * xji, dj - di);
            c *= qpoch(Scalar(1), t * xji, dj - di).inverse();
        }
    }
    return c;
}

QRatio op_D_term_rewritten(const std::vector<int>& comp) {
    int k = static_cast<int>(comp.size());
    Monomial t = Monomial::var(vars::t());
    Monomial q = Monomial::var(vars::q());
    QRatio c;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            int dj = comp[static_cast<size_t>(j - 1)];
            Monomial xji = x_ratio(j, i);
            c *= qpoch(Scalar(1), t * xji, dj);
            c *= qpoch(Scalar(1), q * xji, dj).inverse();
        }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            int delta = comp[static_cast<size_t>(j - 1)] - comp[static_cast<size_t>(i - 1)];
            Monomial xji = x_ratio(j, i);
            c.push(Scalar(1), Monomial::var(vars::q(), delta) * xji, 1);
            c.push(Scalar(1), xji, -1);
            c *= qpoch(Scalar(1), q * t.inverse() * xji, delta);
            c *= qpoch(Scalar(1), t * xji, delta).inverse();
            c.mul_unit(Scalar(1), t.pow(delta) * q.pow(-delta));
        }
    return c;
}

ShiftOperator op_D(int d, int k) {
    if (d < 0) throw UsageError("operator degree must be nonnegative");
    ShiftOperator op(k);
    for (const auto& comp : compositions_of(d, k)) op.add_term(comp, op_D_term(comp));
    return op;
}

ShiftOperator op_N(int d, int k) {
    if (d < 0) throw UsageError("operator degree must be nonnegative");
    Monomial t = Monomial::var(vars::t());
    Monomial q = Monomial::var(vars::q());
    ShiftOperator op(k);
    for (const auto& comp : compositions_of(d, k)) {
        QRatio c;
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                int dj = comp[static_cast<size_t>(j - 1)];
                Monomial xji = x_ratio(j, i);
                c *= qpoch(Scalar(1), t * xji, dj);
                c *= qpoch(Scalar(1), q * xji, dj).inverse();
            }
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                int di = comp[static_cast<size_t>(i - 1)];
                int dj = comp[static_cast<size_t>(j - 1)];
                // (q^{d_j}x_j - q^{d_i}x_i)/(x_j - x_i)
                //   = q^{d_i} (1 - q^{d_j-d_i}x_j/x_i)/(1 - x_j/x_i)
                Monomial xji = x_ratio(j, i);
                c.mul_unit(Scalar(1), q.pow(di));
                c.push(Scalar(1), q.pow(dj - di) * xji, 1);
                c.push(Scalar(1), xji, -1);
            }
        op.add_term(comp, c);
    }
    return op;
}

RatFunc apply(const ShiftOperator& op, const RatFunc& f) {
    RatFunc out;
    for (const auto& [shift, cs] : op.terms()) {
        SubstMap rules;
        for (int i = 1; i <= op.k(); ++i) {
            int d = shift[static_cast<size_t>(i - 1)];
            if (d != 0)
                rules[vars::x(i)] = {Scalar(1), Monomial::var(vars::q(), d) * Monomial::var(vars::x(i))};
        }
        RatFunc shifted = rules.empty() ? f : f.substituted(rules);
        for (const QRatio& c : cs) out += c.to_ratfunc() * shifted;
    }
    return out;
}

ShiftOperator compose(const ShiftOperator& a, const ShiftOperator& b) {
    if (a.k() != b.k()) throw UsageError("operator variable counts differ");
    ShiftOperator out(a.k());
    for (const auto& [sa, cas] : a.terms()) {
        SubstMap rules;
        for (int i = 1; i <= a.k(); ++i) {
            int d = sa[static_cast<size_t>(i - 1)];
            if (d != 0)
                rules[vars::x(i)] = {Scalar(1), Monomial::var(vars::q(), d) * Monomial::var(vars::x(i))};
        }
        for (const auto& [sb, cbs] : b.terms()) {
            std::vector<int> s = sa;
            for (size_t i = 0; i < s.size(); ++i) s[i] += sb[i];
            for (const QRatio& ca : cas)
                for (const QRatio& cb : cbs) {
                    QRatio c = ca;
                    c *= rules.empty() ? cb : cb.substituted(rules);
                    out.add_term(s, std::move(c));
                }
        }
    }
    return out;
}

bool op_equal(const ShiftOperator& a, const ShiftOperator& b) {
    if (a.k() != b.k()) return false;
    std::map<std::vector<int>, bool> shifts;
    for (const auto& [s, c] : a.terms()) shifts[s] = true;
    for (const auto& [s, c] : b.terms()) shifts[s] = true;
    for (const auto& [s, unused] : shifts)
        if (!ratfunc_equal(a.coefficient(s), b.coefficient(s))) return false;
    return true;
}

} // namespace qv
