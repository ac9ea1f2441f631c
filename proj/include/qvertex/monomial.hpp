#pragma once

#include "qvertex/scalar.hpp"
#include "qvertex/vars.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qv {

/// A substitution rule sends a variable to coeff * monomial.
class Monomial;
using SubstMap = std::map<VarId, std::pair<Scalar, class Monomial>>;

/// Sparse Laurent monomial: variable -> nonzero integer exponent,
/// kept sorted by VarId. The canonical order is graded lexicographic
/// (total degree first, then exponents along increasing VarId).
class Monomial {
public:
    Monomial() = default;

    static Monomial var(VarId v, int e = 1) {
        Monomial m;
        if (e != 0) m.e_.emplace_back(v, e);
        return m;
    }

    bool empty() const { return e_.empty(); }

    int exponent(VarId v) const {
        for (const auto& [w, e] : e_)
            if (w == v) return e;
        return 0;
    }

    const std::vector<std::pair<VarId, int>>& entries() const { return e_; }

    Monomial& operator*=(const Monomial& o) {
        if (o.e_.empty()) return *this;
        std::vector<std::pair<VarId, int>> out;
        out.reserve(e_.size() + o.e_.size());
        size_t i = 0, j = 0;
        while (i < e_.size() && j < o.e_.size()) {
            if (e_[i].first < o.e_[j].first) out.push_back(e_[i++]);
            else if (e_[i].first > o.e_[j].first) out.push_back(o.e_[j++]);
            else {
                int s = e_[i].second + o.e_[j].second;
                if (s != 0) out.emplace_back(e_[i].first, s);
                ++i, ++j;
            }
        }
        for (; i < e_.size(); ++i) out.push_back(e_[i]);
        for (; j < o.e_.size(); ++j) out.push_back(o.e_[j]);
        e_ = std::move(out);
        return *this;
    }

    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    Monomial pow(int n) const {
        Monomial m;
        if (n == 0) return m;
        m.e_ = e_;
        for (auto& [v, e] : m.e_) e *= n;
        return m;
    }

    Monomial inverse() const { return pow(-1); }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : e_) d += e;
        return d;
    }

    int degree(Group g) const {
        int d = 0;
        for (const auto& [v, e] : e_)
            if (vars::group(v) == g) d += e;
        return d;
    }

    bool involves_group(Group g) const {
        for (const auto& [v, e] : e_)
            if (vars::group(v) == g) return true;
        return false;
    }

    /// Graded-lex comparison; < 0, 0, > 0.
    static int cmp(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        size_t i = 0, j = 0;
        while (i < a.e_.size() && j < b.e_.size()) {
            if (a.e_[i].first != b.e_[j].first) {
                // earlier variable with a nonzero exponent: larger exponent wins
                if (a.e_[i].first < b.e_[j].first) return a.e_[i].second > 0 ? 1 : -1;
                return b.e_[j].second > 0 ? -1 : 1;
            }
            if (a.e_[i].second != b.e_[j].second) return a.e_[i].second < b.e_[j].second ? -1 : 1;
            ++i, ++j;
        }
        if (i < a.e_.size()) return a.e_[i].second > 0 ? 1 : -1;
        if (j < b.e_.size()) return b.e_[j].second > 0 ? -1 : 1;
        return 0;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(e_ == o.e_); }
    bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

    /// Simultaneous substitution; returns the scalar picked up from rule
    /// coefficients and the image monomial.
    std::pair<Scalar, Monomial> substituted(const SubstMap& rules) const {
        Scalar c(1);
        Monomial m;
        for (const auto& [v, e] : e_) {
            auto it = rules.find(v);
            if (it == rules.end()) {
                m *= Monomial::var(v, e);
            } else {
                c *= scalar_pow(it->second.first, e);
                m *= it->second.second.pow(e);
            }
        }
        return {c, m};
    }

    /// Split into (vars whose group is accepted by pred, the rest).
    template <typename Pred>
    std::pair<Monomial, Monomial> split(Pred pred) const {
        Monomial in, out;
        for (const auto& [v, e] : e_) {
            if (pred(vars::group(v))) in.e_.emplace_back(v, e);
            else out.e_.emplace_back(v, e);
        }
        return {in, out};
    }

    std::string text() const;

private:
    std::vector<std::pair<VarId, int>> e_;
};

} // namespace qv
