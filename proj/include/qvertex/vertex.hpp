#pragma once

#include "qvertex/macdonald.hpp"
#include "qvertex/quiver.hpp"
#include "qvertex/series.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qv::vx {

/// Flat indexing of the degree variables d_{i,j}, node i, 1 <= j <= v_i.
struct DegreeLayout {
    std::vector<int> dims;
    std::vector<int> offsets;
    int total = 0;

    explicit DegreeLayout(const std::vector<int>& v);
    int index(int node, int j) const { return offsets[static_cast<size_t>(node - 1)] + j - 1; }
    int deg(const std::vector<int>& d, int node, int j) const { return d[static_cast<size_t>(index(node, j))]; }
};

/// All nonnegative tuples of the given length with sum at most cap.
std::vector<std::vector<int>> degree_tuples(int length, int cap);

/// One summand of the A-chain vertex sum shared by the dual variety and the
/// point variety: framing blocks at the listed nodes (the flag marks the
/// u-twisted framing), arrow blocks switching shape at split_node, and the
/// vector-multiple blocks at every node. Exact product of q-Pochhammers in
/// (q, hbar_dual, u); vanishing summands come out as zero QRatios.
QRatio chain_summand(const QuiverA& quiver, int split_node,
                     const std::vector<std::pair<int, bool>>& framings, const DegreeLayout& layout,
                     const std::vector<int>& d);

/// Kahler monomial prod_i z_i^{sum_j d_{i,j}} of a degree tuple.
Monomial chain_z_monomial(const QuiverA& quiver, const DegreeLayout& layout, const std::vector<int>& d);

/// Tautological weights at the insertion node, shifted by the tuple degrees:
/// x_j = hbar_dual^{j-1} q^{d_j}.
std::vector<std::pair<Scalar, Monomial>> insertion_point(const std::vector<int>& node_degrees);

/// Vertex function of the point variety X_lambda as a series in the z_i with
/// Q(q, hbar_dual) coefficients; optional descendant tau (symmetric in
/// v_{insertion_node} variables) inserted at the given node.
TruncatedSeries vertex_xlambda(const Partition& lambda, const Caps& caps,
                               const mac::SymPoly* tau = nullptr, int insertion_node = -1);

/// Vertex function of the dual variety: series in the z_i (Kahler cap) with
/// the equivariant ratio u expanded (Ratio cap).
TruncatedSeries vertex_xdual(int k, int n, const Caps& caps);

/// Vertex function of X = T*Gr(k,n): one summand per degree tuple, exact in
/// the equivariant parameters a_1..a_n.
std::map<std::vector<int>, QRatio> vertex_x_summands(int k, int n, int zcap);
TruncatedSeries vertex_x_series(int k, int n, const Caps& caps);

/// Formal product of phi(c*m)^mult factors.
class PhiProduct {
public:
    void push(const Scalar& c, const Monomial& m, int mult);
    const std::vector<std::pair<std::pair<Scalar, Monomial>, int>>& args() const { return args_; }

    PhiProduct inverse() const;
    PhiProduct substituted(const SubstMap& rules) const;
    PhiProduct& operator*=(const PhiProduct& o);

    TruncatedSeries expand(const Caps& caps) const;

    /// Exact quotient (shifted product)/(product) where the substitution
    /// scales each phi argument by a power of q.
    QRatio shift_quotient(const SubstMap& shift) const;

private:
    std::vector<std::pair<std::pair<Scalar, Monomial>, int>> args_;
};

/// prod over boxes of phi(hbar_dual z_box)/phi(z_box).
PhiProduct vertex_product(const Partition& lambda);

/// prod_{i=1..k} phi(u hbar_dual^i)/phi(u q hbar_dual^{i-1}).
PhiProduct prefactor_dual(int k);

/// prod_{i=1..k} phi((hbar/q)^{i-1} z)/phi(hbar (hbar/q)^{i-1} z).
PhiProduct prefactor_x(int k);

/// The one-row Macdonald descendant of the reduction identity:
/// (q/hbar_dual)_d / (q)_d * P_(d)(x; q, q/hbar_dual), with its scalar
/// prefactor returned separately.
struct RowDescendant {
    mac::SymPoly tau; // parameters already specialized to (q, q/hbar_dual)
    RatFunc scale;    // (q/hbar_dual)_d / (q)_d
};
RowDescendant row_descendant(int d, int k);

} // namespace qv::vx
