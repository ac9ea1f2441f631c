#include "qvertex/vars.hpp"

#include <map>
#include <vector>

namespace qv::vars {
namespace {

struct Registry {
    std::vector<std::string> names;
    std::vector<Group> groups;
    std::map<std::string, VarId, std::less<>> by_name;

    VarId add(std::string n, Group g) {
        VarId id = static_cast<VarId>(names.size());
        by_name.emplace(n, id);
        names.push_back(std::move(n));
        groups.push_back(g);
        return id;
    }
};

struct Ids {
    Registry reg;
    VarId q, t, hbar, hbar_dual, u, y, z;
    std::vector<VarId> zi, ri, ai, xi;

    Ids() {
        q = reg.add("q", Group::Parameter);
        t = reg.add("t", Group::Parameter);
        hbar = reg.add("hbar", Group::Parameter);
        hbar_dual = reg.add("hbar_dual", Group::Parameter);
        u = reg.add("u", Group::Ratio);
        y = reg.add("y", Group::Kahler);
        z = reg.add("z", Group::Kahler);
        for (int i = 1; i < kMaxN; ++i) zi.push_back(reg.add("z_" + std::to_string(i), Group::Kahler));
        for (int i = 1; i < kMaxN; ++i) ri.push_back(reg.add("r_" + std::to_string(i), Group::Ratio));
        for (int i = 1; i <= kMaxN; ++i) ai.push_back(reg.add("a_" + std::to_string(i), Group::Generic));
        for (int i = 1; i <= kMaxK; ++i) xi.push_back(reg.add("x_" + std::to_string(i), Group::Generic));
    }
};

const Ids& ids() {
    static const Ids s;
    return s;
}

} // namespace

VarId q() { return ids().q; }
VarId t() { return ids().t; }
VarId hbar() { return ids().hbar; }
VarId hbar_dual() { return ids().hbar_dual; }
VarId u() { return ids().u; }
VarId y() { return ids().y; }
VarId z() { return ids().z; }

VarId z(int i) { return ids().zi.at(static_cast<size_t>(i - 1)); }
VarId r(int i) { return ids().ri.at(static_cast<size_t>(i - 1)); }
VarId a(int i) { return ids().ai.at(static_cast<size_t>(i - 1)); }
VarId x(int i) { return ids().xi.at(static_cast<size_t>(i - 1)); }

int count() { return static_cast<int>(ids().reg.names.size()); }
const std::string& name(VarId v) { return ids().reg.names.at(static_cast<size_t>(v)); }
Group group(VarId v) { return ids().reg.groups.at(static_cast<size_t>(v)); }

std::optional<VarId> find(std::string_view n) {
    const auto& m = ids().reg.by_name;
    auto it = m.find(n);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

} // namespace qv::vars
