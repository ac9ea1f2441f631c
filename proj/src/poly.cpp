#include "qvertex/poly.hpp"

#include "qvertex/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace qv {

LaurentPoly poly_from_sorted(std::vector<LaurentPoly::Term>&& t) {
    LaurentPoly p;
    p.t_ = std::move(t);
    return p;
}

void LaurentPoly::compact() {
    std::erase_if(t_, [](const Term& t) { return t.second == 0; });
}

Scalar LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& t, const Monomial& mm) { return Monomial::cmp(t.first, mm) < 0; });
    if (it != t_.end() && it->first == m) return it->second;
    return Scalar(0);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.t_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = Monomial::cmp(t_[i].first, o.t_[j].first);
        if (c < 0) out.push_back(std::move(t_[i++]));
        else if (c > 0) out.push_back(o.t_[j++]);
        else {
            Scalar s = t_[i].second + o.t_[j].second;
            if (s != 0) out.emplace_back(t_[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) out.push_back(std::move(t_[i]));
    for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
    t_ = std::move(out);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [m, c] : p.t_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_single_term()) {
        LaurentPoly p = a;
        p.mul_scalar(b.t_[0].second);
        p.mul_monomial(b.t_[0].first);
        return p;
    }
    if (a.is_single_term()) return b * a;
    std::map<Monomial, Scalar> acc;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            Monomial m = ma * mb;
            auto [it, fresh] = acc.try_emplace(m, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    std::vector<LaurentPoly::Term> t;
    t.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) t.emplace_back(m, std::move(c));
    std::sort(t.begin(), t.end(),
              [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) { return Monomial::cmp(x.first, y.first) < 0; });
    return poly_from_sorted(std::move(t));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    size_t n = std::min(t_.size(), o.t_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = Monomial::cmp(t_[i].first, o.t_[i].first);
        if (c != 0) return c < 0;
        if (t_[i].second != o.t_[i].second) return t_[i].second < o.t_[i].second;
    }
    return t_.size() < o.t_.size();
}

LaurentPoly& LaurentPoly::mul_scalar(const Scalar& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [m, s] : t_) s *= c;
    return *this;
}

LaurentPoly& LaurentPoly::mul_monomial(const Monomial& m) {
    if (m.empty()) return *this;
    for (auto& [mm, s] : t_) mm *= m;
    std::sort(t_.begin(), t_.end(), [](const Term& x, const Term& y) { return Monomial::cmp(x.first, y.first) < 0; });
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly r = one();
    LaurentPoly b = *this;
    while (n) {
        if (n & 1u) r *= b;
        n >>= 1u;
        if (n) b *= b;
    }
    return r;
}

LaurentPoly LaurentPoly::substituted(const SubstMap& rules) const {
    LaurentPoly out;
    for (const auto& [m, c] : t_) {
        auto [cc, mm] = m.substituted(rules);
        out += term(c * cc, mm);
    }
    return out;
}

int LaurentPoly::degree(Group g) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : t_) {
        int e = m.degree(g);
        if (first || e > d) d = e;
        first = false;
    }
    return d;
}

int LaurentPoly::min_degree(Group g) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : t_) {
        int e = m.degree(g);
        if (first || e < d) d = e;
        first = false;
    }
    return d;
}

std::set<VarId> LaurentPoly::variables() const {
    std::set<VarId> s;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m.entries()) s.insert(v);
    return s;
}

Monomial LaurentPoly::monomial_content() const {
    if (t_.empty()) return {};
    std::set<VarId> vs = variables();
    Monomial content;
    for (VarId v : vs) {
        int mn = 0;
        bool first = true;
        for (const auto& [m, c] : t_) {
            int e = m.exponent(v); // 0 when absent
            if (first || e < mn) mn = e;
            first = false;
        }
        if (mn != 0) content *= Monomial::var(v, mn);
    }
    return content;
}

std::optional<LaurentPoly> div_exact(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) return std::nullopt;
    if (p.is_zero()) return LaurentPoly{};
    // Normalize away Laurent shifts so ordinary polynomial division applies.
    Monomial cp = p.monomial_content(), cd = d.monomial_content();
    LaurentPoly pn = p, dn = d;
    pn.mul_monomial(cp.inverse());
    dn.mul_monomial(cd.inverse());
    LaurentPoly rem = pn, quot;
    const auto dl = dn.leading();
    while (!rem.is_zero()) {
        const auto rl = rem.leading(); // copy: rem is modified below
        Monomial qm = rl.first * dl.first.inverse();
        // divisibility in the polynomial ring: no negative exponents allowed
        for (const auto& [v, e] : qm.entries())
            if (e < 0) return std::nullopt;
        LaurentPoly qt = LaurentPoly::term(rl.second / dl.second, qm);
        quot += qt;
        rem -= qt * dn;
        if (!rem.is_zero() && Monomial::cmp(rem.leading().first, rl.first) >= 0) return std::nullopt;
    }
    quot.mul_monomial(cp * cd.inverse());
    return quot;
}

// ---------------------------------------------------------------------------
// canonical text and parsing

std::string Monomial::text() const {
    if (e_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : e_) {
        if (!s.empty()) s += "*";
        s += vars::name(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string LaurentPoly::text() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
        Scalar ac = abs(c);
        bool neg = c < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (m.empty()) s += scalar_text(ac);
        else if (ac == 1) s += m.text();
        else s += scalar_text(ac) + "*" + m.text();
    }
    return s;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
};

long parse_int(Cursor& c) {
    c.skip();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw ParseError("expected integer at position " + std::to_string(start));
    return std::stol(c.s.substr(start, c.i - start));
}

Scalar parse_rational(Cursor& c) {
    c.skip();
    size_t start = c.i;
    if (c.i < c.s.size() && c.s[c.i] == '-') ++c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    std::string numstr = c.s.substr(start, c.i - start);
    if (numstr.empty() || numstr == "-") throw ParseError("expected number at position " + std::to_string(start));
    Scalar v(numstr);
    if (c.eat('/')) {
        size_t ds = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        std::string denstr = c.s.substr(ds, c.i - ds);
        if (denstr.empty()) throw ParseError("expected denominator");
        v /= Scalar(denstr);
    }
    return v;
}

std::string parse_name(Cursor& c) {
    c.skip();
    size_t start = c.i;
    while (c.i < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
        ++c.i;
    if (c.i == start) throw ParseError("expected variable name at position " + std::to_string(start));
    return c.s.substr(start, c.i - start);
}

// term := rational | [rational '*'] varpow ('*' varpow)*
LaurentPoly parse_term(Cursor& c) {
    Scalar coeff(1);
    Monomial mono;
    bool have_any = false;
    char p = c.peek();
    if (std::isdigit(static_cast<unsigned char>(p))) {
        coeff = parse_rational(c);
        have_any = true;
        if (!c.eat('*')) return LaurentPoly::term(coeff, mono);
    }
    while (true) {
        std::string n = parse_name(c);
        if (n == "1" || n.empty()) break;
        auto v = vars::find(n);
        if (!v) throw ParseError("unknown variable '" + n + "'");
        int e = 1;
        if (c.eat('^')) e = static_cast<int>(parse_int(c));
        mono *= Monomial::var(*v, e);
        have_any = true;
        if (!c.eat('*')) break;
        // allow "2*q*3" style? no: after '*' expect name or digit (digit means rational factor)
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff *= parse_rational(c);
            if (!c.eat('*')) break;
        }
    }
    if (!have_any) throw ParseError("empty term");
    return LaurentPoly::term(coeff, mono);
}

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& s) {
    Cursor c{s};
    LaurentPoly p;
    bool neg = c.eat('-');
    while (true) {
        LaurentPoly t = parse_term(c);
        if (neg) t.mul_scalar(Scalar(-1));
        p += t;
        c.skip();
        if (c.eat('+')) neg = false;
        else if (c.eat('-')) neg = true;
        else break;
    }
    c.skip();
    if (c.i != c.s.size()) throw ParseError("trailing input at position " + std::to_string(c.i));
    return p;
}

} // namespace qv
