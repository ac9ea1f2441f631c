#include "qvertex/partition.hpp"

#include "qvertex/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qv {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    for (size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0) throw UsageError("partition parts must be positive");
        if (i > 0 && p_[i] > p_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(int rows, int width) {
    if (rows < 0 || width < 0) throw UsageError("rectangle dimensions must be nonnegative");
    if (rows == 0 || width == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<size_t>(rows), width));
}

int Partition::weight() const { return std::accumulate(p_.begin(), p_.end(), 0); }

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> cs;
    for (int x = 1; x <= length(); ++x)
        for (int y = 1; y <= part(x); ++y) cs.push_back({x, y});
    return cs;
}

Partition Partition::conjugate() const {
    if (p_.empty()) return {};
    std::vector<int> c(static_cast<size_t>(p_[0]), 0);
    for (int x = 1; x <= length(); ++x)
        for (int y = 1; y <= part(x); ++y) ++c[static_cast<size_t>(y - 1)];
    return Partition(std::move(c));
}

std::string Partition::text() const {
    if (p_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < p_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& s) {
    if (s.empty() || s == "0") return {};
    std::vector<int> parts;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        std::string tok = s.substr(i, j - i);
        if (tok.empty()) throw ParseError("empty partition part in '" + s + "'");
        parts.push_back(std::stoi(tok));
        i = j + 1;
    }
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return false;
    int sa = 0, sb = 0;
    int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

int content(const Partition& lambda, Cell c) {
    if (!lambda.contains(c))
        throw CellOutOfRange("cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                             ") outside partition " + lambda.text());
    return c.x - c.y + lambda.first();
}

std::vector<Cell> hook(const Partition& lambda, Cell c) {
    if (!lambda.contains(c))
        throw CellOutOfRange("cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                             ") outside partition " + lambda.text());
    std::vector<Cell> h;
    for (int m = c.y; m <= lambda.part(c.x); ++m) h.push_back({c.x, m});
    for (int m = c.x + 1; m <= lambda.length(); ++m)
        if (lambda.contains({m, c.y})) h.push_back({m, c.y});
    std::sort(h.begin(), h.end());
    return h;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int width) {
    std::vector<Partition> out;
    out.emplace_back();
    for (int w = 1; w <= rows * width; ++w)
        for (const Partition& p : partitions_of(w))
            if (p.length() <= rows && p.first() <= width) out.push_back(p);
    return out;
}

} // namespace qv
