#pragma once

#include <string>
#include <vector>

namespace qv {

/// Young-diagram cell (row x, column y), both 1-based.
struct Cell {
    int x, y;
    bool operator==(const Cell& o) const { return x == o.x && y == o.y; }
    bool operator<(const Cell& o) const { return x != o.x ? x < o.x : y < o.y; }
};

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates, drops trailing zeros
    static Partition rectangle(int rows, int width); // (width^rows)

    const std::vector<int>& parts() const { return p_; }
    int length() const { return static_cast<int>(p_.size()); }
    int part(int i) const { return i >= 1 && i <= length() ? p_[static_cast<size_t>(i - 1)] : 0; } // 1-based
    int weight() const;
    bool empty() const { return p_.empty(); }
    int first() const { return p_.empty() ? 0 : p_[0]; }

    bool contains(Cell c) const { return c.x >= 1 && c.x <= length() && c.y >= 1 && c.y <= part(c.x); }
    std::vector<Cell> cells() const;

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator!=(const Partition& o) const { return !(p_ == o.p_); }
    bool operator<(const Partition& o) const { return p_ < o.p_; } // lex, for map keys

    std::string text() const; // "3,3,1"; empty partition prints "0"
    static Partition parse(const std::string& s);

private:
    std::vector<int> p_;
};

/// Dominance order on partitions of equal weight.
bool dominance_leq(const Partition& a, const Partition& b);

/// Content of a cell with this paper's shift: c(x,y) = x - y + lambda_1,
/// so the smallest content over the diagram is 1.
int content(const Partition& lambda, Cell c);

/// Hook based at a cell: everything directly right or below, inclusive.
std::vector<Cell> hook(const Partition& lambda, Cell c);

std::vector<Partition> partitions_of(int n);
/// Partitions fitting in a rows x width box (including the empty one).
std::vector<Partition> partitions_in_box(int rows, int width);

} // namespace qv
