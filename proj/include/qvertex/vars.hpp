#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace qv {

using VarId = int;

/// Truncation group of a variable. PARAMETER variables (q, hbar, ...) live in
/// series coefficients, KAHLER and RATIO variables are the ones series get
/// truncated in, GENERIC variables stay exact everywhere.
enum class Group : unsigned char { Parameter, Kahler, Ratio, Generic };

/// Fixed registry of every variable the library ever uses. Ids are assigned
/// once at startup so the canonical monomial order is reproducible.
namespace vars {

constexpr int kMaxN = 12; // supports z_1..z_11, a_1..a_12, r_1..r_11
constexpr int kMaxK = 9;  // supports x_1..x_9 (Macdonald needs |mu| variables)

VarId q();
VarId t();
VarId hbar();
VarId hbar_dual();
VarId u();
VarId y();
VarId z(); // the single Kahler parameter of T*Gr(k,n)

VarId z(int i); // z_i, 1 <= i <= kMaxN-1
VarId r(int i); // r_i = a_{i+1}/a_i, 1 <= i <= kMaxN-1
VarId a(int i); // a_i, 1 <= i <= kMaxN
VarId x(int i); // x_i, 1 <= i <= kMaxK

int count();
const std::string& name(VarId v);
Group group(VarId v);
std::optional<VarId> find(std::string_view name);

} // namespace vars
} // namespace qv
