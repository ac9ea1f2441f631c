#include "qvertex/macdonald.hpp"

#include "qvertex/errors.hpp"

#include <algorithm>
#include <mutex>

namespace qv::mac {
namespace {

std::mutex cache_mutex;

RatFunc z_factor(const Partition& la) {
    // n^{m_n} m_n! over part multiplicities
    Scalar c(1);
    const auto& p = la.parts();
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        long mult = static_cast<long>(j - i);
        for (long f = 1; f <= mult; ++f) c *= Scalar(f) * Scalar(p[i]);
        i = j;
    }
    // prod (1-q^{la_i})/(1-t^{la_i})
    LaurentPoly num = LaurentPoly::from_scalar(c);
    RatFunc::Factors den;
    for (int part : p) {
        num *= LaurentPoly::one() - LaurentPoly::variable(vars::q(), part);
        den.emplace_back(LaurentPoly::one() - LaurentPoly::variable(vars::t(), part), 1);
    }
    return RatFunc::from_parts(std::move(num), std::move(den));
}

// Per-weight transition data between the m and p bases.
struct WeightBasis {
    std::vector<Partition> parts; // lex ascending
    std::map<Partition, int> index;
    std::vector<std::vector<Scalar>> m_in_p; // m_nu = sum_rho m_in_p[nu][rho] p_rho
    std::vector<RatFunc> zvals;
    std::map<std::pair<int, int>, RatFunc> gram;
};

std::map<int, WeightBasis>& weight_cache() {
    static std::map<int, WeightBasis> c;
    return c;
}

std::vector<std::vector<Scalar>> invert_matrix(std::vector<std::vector<Scalar>> a) {
    size_t n = a.size();
    std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw UsageError("singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Scalar d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Scalar f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

WeightBasis& weight_basis(int s) {
    auto& cache = weight_cache();
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;

    WeightBasis wb;
    wb.parts = partitions_of(s);
    std::sort(wb.parts.begin(), wb.parts.end(),
              [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    for (size_t i = 0; i < wb.parts.size(); ++i) wb.index[wb.parts[i]] = static_cast<int>(i);

    size_t n = wb.parts.size();
    if (s > vars::kMaxK) throw UsageError("weight exceeds the registered x-variable budget");

    // expand p_rho in s variables, then read off the coefficient of the
    // dominant monomial x^nu for every partition nu
    std::vector<std::vector<Scalar>> p_in_m(n, std::vector<Scalar>(n, Scalar(0)));
    for (size_t r = 0; r < n; ++r) {
        LaurentPoly poly = LaurentPoly::one();
        for (int part : wb.parts[r].parts()) {
            LaurentPoly ps;
            for (int j = 1; j <= s; ++j) ps += LaurentPoly::variable(vars::x(j), part);
            poly *= ps;
        }
        for (size_t c = 0; c < n; ++c) {
            Monomial dom;
            const auto& nu = wb.parts[c].parts();
            for (size_t i = 0; i < nu.size(); ++i) dom *= Monomial::var(vars::x(static_cast<int>(i + 1)), nu[i]);
            p_in_m[r][c] = poly.coefficient(dom);
        }
    }
    wb.m_in_p = invert_matrix(std::move(p_in_m));
    wb.zvals.reserve(n);
    for (const auto& p : wb.parts) wb.zvals.push_back(z_factor(p));

    auto [ins, ok] = cache.emplace(s, std::move(wb));
    return ins->second;
}

const RatFunc& gram_entry(WeightBasis& wb, int i, int j) {
    if (i > j) std::swap(i, j);
    auto key = std::make_pair(i, j);
    auto it = wb.gram.find(key);
    if (it != wb.gram.end()) return it->second;
    RatFunc g;
    size_t n = wb.parts.size();
    for (size_t r = 0; r < n; ++r) {
        const Scalar& ci = wb.m_in_p[static_cast<size_t>(i)][r];
        const Scalar& cj = wb.m_in_p[static_cast<size_t>(j)][r];
        if (ci == 0 || cj == 0) continue;
        RatFunc term = wb.zvals[r];
        term.mul_scalar(ci * cj);
        g += term;
    }
    g.reduce();
    return wb.gram.emplace(key, std::move(g)).first->second;
}

RatFunc inner_m_with_P(WeightBasis& wb, const Partition& mu, const MExpansion& P) {
    int i = wb.index.at(mu);
    RatFunc r;
    for (const auto& [nu, c] : P) {
        RatFunc g = gram_entry(wb, i, wb.index.at(nu));
        r += g * c;
    }
    r.reduce();
    return r;
}

struct PCache {
    std::map<Partition, MExpansion> exp;
    std::map<Partition, RatFunc> norm;
};

PCache& p_cache() {
    static PCache c;
    return c;
}

const MExpansion& expansion_locked(const Partition& mu);

RatFunc norm_locked(const Partition& nu) {
    auto& pc = p_cache();
    auto it = pc.norm.find(nu);
    if (it != pc.norm.end()) return it->second;
    WeightBasis& wb = weight_basis(nu.weight());
    // <P,P> = <m_nu, P_nu> since the lower m's pair to zero against P_nu
    RatFunc n = inner_m_with_P(wb, nu, expansion_locked(nu));
    return pc.norm.emplace(nu, std::move(n)).first->second;
}

const MExpansion& expansion_locked(const Partition& mu) {
    auto& pc = p_cache();
    auto it = pc.exp.find(mu);
    if (it != pc.exp.end()) return it->second;

    MExpansion e;
    e.emplace(mu, RatFunc::one());
    if (mu.weight() > 0) {
        WeightBasis& wb = weight_basis(mu.weight());
        for (const Partition& nu : wb.parts) {
            if (nu == mu || !dominance_leq(nu, mu)) continue;
            const MExpansion& pnu = expansion_locked(nu);
            RatFunc c = inner_m_with_P(wb, mu, pnu) / norm_locked(nu);
            c.reduce();
            if (c.is_zero()) continue;
            for (const auto& [tau, ct] : pnu) {
                RatFunc add = c * ct;
                auto [jt, fresh] = e.try_emplace(tau, -add);
                if (!fresh) {
                    jt->second -= add;
                    jt->second.reduce();
                    if (jt->second.is_zero()) e.erase(jt);
                }
            }
        }
    }
    return p_cache().exp.emplace(mu, std::move(e)).first->second;
}

} // namespace

RatFunc power_inner(const Partition& la, const Partition& mu) {
    if (la != mu) return RatFunc();
    return z_factor(la);
}

RatFunc m_gram(const Partition& mu, const Partition& nu) {
    if (mu.weight() != nu.weight()) return RatFunc();
    std::lock_guard<std::mutex> lock(cache_mutex);
    WeightBasis& wb = weight_basis(mu.weight());
    return gram_entry(wb, wb.index.at(mu), wb.index.at(nu));
}

const MExpansion& macdonald_m_expansion(const Partition& mu) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    return expansion_locked(mu);
}

MExpansion macdonald_gs_literal(const Partition& mu, int ext) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    WeightBasis& wb = weight_basis(mu.weight());
    std::vector<Partition> order = wb.parts;
    if (ext == 1) {
        std::sort(order.begin(), order.end(), [](const Partition& a, const Partition& b) {
            if (a.length() != b.length()) return a.length() > b.length();
            return a.parts() < b.parts();
        });
    }
    std::map<Partition, MExpansion> done;
    std::map<Partition, RatFunc> norms;
    for (const Partition& nu : order) {
        MExpansion e;
        e.emplace(nu, RatFunc::one());
        for (const auto& [rho, prho] : done) {
            // full projection, including provably-zero ones
            RatFunc c = inner_m_with_P(wb, nu, prho) / norms.at(rho);
            c.reduce();
            if (c.is_zero()) continue;
            for (const auto& [tau, ct] : prho) {
                RatFunc add = c * ct;
                auto [jt, fresh] = e.try_emplace(tau, -add);
                if (!fresh) {
                    jt->second -= add;
                    jt->second.reduce();
                    if (jt->second.is_zero()) e.erase(jt);
                }
            }
        }
        // honest norm: <P,P> over the full expansion
        RatFunc n;
        for (const auto& [t1, c1] : e)
            for (const auto& [t2, c2] : e) {
                RatFunc g = gram_entry(wb, wb.index.at(t1), wb.index.at(t2));
                n += g * c1 * c2;
            }
        n.reduce();
        norms.emplace(nu, std::move(n));
        if (nu == mu) return e;
        done.emplace(nu, std::move(e));
    }
    throw UsageError("partition not found in its own weight class");
}

// ---------------------------------------------------------------------------
// k-variable realizations

LaurentPoly monomial_sym_poly(const Partition& mu, int k) {
    if (mu.length() > k) throw LengthError("partition longer than the variable count");
    std::vector<int> e(static_cast<size_t>(k), 0);
    for (int i = 1; i <= mu.length(); ++i) e[static_cast<size_t>(i - 1)] = mu.part(i);
    std::sort(e.begin(), e.end());
    LaurentPoly p;
    do {
        Monomial m;
        for (int i = 0; i < k; ++i)
            if (e[static_cast<size_t>(i)] != 0) m *= Monomial::var(vars::x(i + 1), e[static_cast<size_t>(i)]);
        p += LaurentPoly::term(Scalar(1), m);
    } while (std::next_permutation(e.begin(), e.end()));
    return p;
}

SymPoly monomial_sym(const Partition& mu, int k) {
    if (mu.length() > k) throw LengthError("partition longer than the variable count");
    SymPoly s;
    s.k = k;
    s.coeffs.emplace(mu, RatFunc::one());
    return s;
}

SymPoly macdonald_P(const Partition& mu, int k) {
    if (mu.length() > k) throw LengthError("partition longer than the variable count");
    const MExpansion& e = macdonald_m_expansion(mu);
    SymPoly s;
    s.k = k;
    for (const auto& [nu, c] : e)
        if (nu.length() <= k) s.coeffs.emplace(nu, c);
    return s;
}

SymPoly& SymPoly::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        coeffs.clear();
        return *this;
    }
    for (auto& [nu, cc] : coeffs) cc *= c;
    return *this;
}

SymPoly SymPoly::substituted_params(const SubstMap& rules) const {
    SymPoly s;
    s.k = k;
    for (const auto& [nu, c] : coeffs) {
        RatFunc cc = c.substituted(rules);
        if (!cc.is_zero()) s.coeffs.emplace(nu, std::move(cc));
    }
    return s;
}

RatFunc SymPoly::as_ratfunc() const {
    RatFunc r;
    for (const auto& [nu, c] : coeffs) {
        RatFunc term = c;
        term *= RatFunc(monomial_sym_poly(nu, k));
        r += term;
    }
    return r;
}

RatFunc SymPoly::evaluated(const std::vector<std::pair<Scalar, Monomial>>& point) const {
    if (static_cast<int>(point.size()) != k) throw LengthError("evaluation point length must equal k");
    SubstMap rules;
    for (int i = 1; i <= k; ++i) rules[vars::x(i)] = point[static_cast<size_t>(i - 1)];
    RatFunc r;
    for (const auto& [nu, c] : coeffs) {
        LaurentPoly val = monomial_sym_poly(nu, k).substituted(rules);
        RatFunc term = c;
        term *= RatFunc(val);
        r += term;
    }
    r.reduce();
    return r;
}

std::string SymPoly::text() const {
    std::string s;
    for (const auto& [nu, c] : coeffs) {
        if (!s.empty()) s += "\n";
        s += "m[" + nu.text() + "] * (" + c.text() + ")";
    }
    if (s.empty()) s = "0";
    return s;
}

RatFunc macdonald_eval(const Partition& mu, const std::vector<std::pair<Scalar, Monomial>>& point,
                       const std::pair<Scalar, Monomial>& q_slot,
                       const std::pair<Scalar, Monomial>& t_slot) {
    SymPoly p = macdonald_P(mu, static_cast<int>(point.size()));
    SubstMap params;
    params[vars::q()] = q_slot;
    params[vars::t()] = t_slot;
    return p.substituted_params(params).evaluated(point);
}

std::vector<std::pair<Scalar, Monomial>> spectrum_point(const Partition& mu, int k) {
    std::vector<std::pair<Scalar, Monomial>> pt;
    for (int i = 1; i <= k; ++i) {
        Monomial m = Monomial::var(vars::q(), mu.part(i));
        m *= Monomial::var(vars::t(), i - 1);
        m *= Monomial::var(vars::q(), -(i - 1));
        pt.emplace_back(Scalar(1), m);
    }
    return pt;
}

} // namespace qv::mac
