#include "chainlab/lie_fusion.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "chainlab/errors.hpp"

namespace chainlab {

std::string family_name(LieFamily f) {
    switch (f) {
        case LieFamily::SU2: return "SU2";
        case LieFamily::SO3: return "SO3";
        case LieFamily::O3: return "O3";
        case LieFamily::U2: return "U2";
    }
    return "?";
}

LieFamily family_from_name(const std::string& name) {
    if (name == "SU2" || name == "SU(2)") return LieFamily::SU2;
    if (name == "SO3" || name == "SO(3)") return LieFamily::SO3;
    if (name == "O3" || name == "O(3)") return LieFamily::O3;
    if (name == "U2" || name == "U(2)") return LieFamily::U2;
    throw ParseError("unknown Lie family: " + name + " (expected SU2, SO3, O3 or U2)");
}

namespace {

void check_label(const LieLabel& l) {
    if (l.twice_l < 0) throw Error(ErrorCode::Domain, "negative spin label");
    switch (l.family) {
        case LieFamily::SU2:
            break;
        case LieFamily::SO3:
            if (l.twice_l % 2 != 0) throw Error(ErrorCode::Domain, "SO3 labels are integer spins");
            break;
        case LieFamily::O3:
            if (l.epsilon != 0 && l.epsilon != 1)
                throw Error(ErrorCode::Domain, "O3 parity must be 0 or 1");
            if (l.twice_l % 2 != 0)
                throw Error(ErrorCode::Domain, "O3 labels are integer spins with a parity bit");
            break;
        case LieFamily::U2:
            if ((l.m + l.twice_l) % 2 != 0)
                throw Error(ErrorCode::Domain, "U2 labels require m + 2l even");
            break;
    }
}

std::string spin_name(int twice_l) {
    if (twice_l % 2 == 0) return std::to_string(twice_l / 2);
    return std::to_string(twice_l) + "/2";
}

}  // namespace

LieLabel su2_label(int twice_l) {
    LieLabel l{LieFamily::SU2, twice_l, 0, 0};
    check_label(l);
    return l;
}

LieLabel so3_label(int n) {
    LieLabel l{LieFamily::SO3, 2 * n, 0, 0};
    check_label(l);
    return l;
}

LieLabel o3_label(int epsilon, int twice_l) {
    LieLabel l{LieFamily::O3, twice_l, epsilon, 0};
    check_label(l);
    return l;
}

LieLabel u2_label(int m, int twice_l) {
    LieLabel l{LieFamily::U2, twice_l, 0, m};
    check_label(l);
    return l;
}

std::string label_name(const LieLabel& l) {
    switch (l.family) {
        case LieFamily::SU2:
        case LieFamily::SO3: return spin_name(l.twice_l);
        case LieFamily::O3: return "(" + std::to_string(l.epsilon) + "," + spin_name(l.twice_l) + ")";
        case LieFamily::U2: return "(" + std::to_string(l.m) + "," + spin_name(l.twice_l) + ")";
    }
    return "?";
}

std::vector<LieLabel> lie_fusion(const LieLabel& a, const LieLabel& b) {
    if (a.family != b.family)
        throw FamilyMismatch("cannot fuse " + family_name(a.family) + " with " + family_name(b.family));
    check_label(a);
    check_label(b);
    std::vector<LieLabel> out;
    for (int tl = std::abs(a.twice_l - b.twice_l); tl <= a.twice_l + b.twice_l; tl += 2) {
        LieLabel c = a;
        c.twice_l = tl;
        c.epsilon = (a.epsilon + b.epsilon) % 2;
        c.m = a.m + b.m;
        out.push_back(c);
    }
    return out;
}

namespace {

long long invariant_key(const LieLabel& l) {
    switch (l.family) {
        case LieFamily::SU2: return l.twice_l % 2;
        case LieFamily::SO3: return 0;
        case LieFamily::O3: return l.epsilon;
        case LieFamily::U2: return l.m;
    }
    return 0;
}

std::vector<LieLabel> window_labels(LieFamily family, int l_max) {
    std::vector<LieLabel> labels;
    const int tl_max = 2 * l_max;
    switch (family) {
        case LieFamily::SU2:
            for (int tl = 0; tl <= tl_max; ++tl) labels.push_back(su2_label(tl));
            break;
        case LieFamily::SO3:
            for (int n = 0; n <= l_max; ++n) labels.push_back(so3_label(n));
            break;
        case LieFamily::O3:
            for (int tl = 0; tl <= tl_max; tl += 2)
                for (int eps = 0; eps <= 1; ++eps) labels.push_back(o3_label(eps, tl));
            break;
        case LieFamily::U2:
            for (int tl = 0; tl <= tl_max; ++tl)
                for (int m = -tl_max; m <= tl_max; ++m)
                    if ((m + tl) % 2 == 0) labels.push_back(u2_label(m, tl));
            break;
    }
    return labels;
}

}  // namespace

int TruncatedChainReport::class_of(const LieLabel& l) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return partition[i];
    throw Error(ErrorCode::Domain, "label " + label_name(l) + " is outside the window");
}

TruncatedChainReport lie_chain_classes(LieFamily family, int l_max) {
    if (l_max < 2) throw Error(ErrorCode::Domain, "l_max must be at least 2");

    TruncatedChainReport report;
    report.family = family;
    report.l_max = l_max;
    report.labels = window_labels(family, l_max);
    const int n = static_cast<int>(report.labels.size());

    auto label_less = [](const LieLabel& a, const LieLabel& b) {
        return std::tie(a.twice_l, a.epsilon, a.m) < std::tie(b.twice_l, b.epsilon, b.m);
    };
    std::map<LieLabel, int, decltype(label_less)> pos(label_less);
    for (int i = 0; i < n; ++i) pos[report.labels[i]] = i;

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                int first = -1;
                for (const LieLabel& c : lie_fusion(report.labels[i], report.labels[j])) {
                    auto it = pos.find(c);
                    if (it == pos.end()) continue;  // outside the window
                    if (first < 0)
                        first = it->second;
                    else if (unite(first, it->second))
                        changed = true;
                }
            }
    }

    // Canonical class ids by smallest member label index.
    std::vector<int> label_of_root(n, -1);
    report.partition.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (label_of_root[r] < 0) {
            label_of_root[r] = static_cast<int>(report.classes.size());
            report.classes.push_back({});
        }
        report.partition[i] = label_of_root[r];
        report.classes[report.partition[i]].push_back(i);
    }

    // The fixpoint partition must agree with the closed-form invariant.
    report.class_keys.assign(report.classes.size(), 0);
    for (size_t c = 0; c < report.classes.size(); ++c) {
        long long key = invariant_key(report.labels[report.classes[c][0]]);
        for (int i : report.classes[c])
            if (invariant_key(report.labels[i]) != key)
                throw WindowTooSmall("fixpoint merged labels the class invariant separates");
        report.class_keys[c] = key;
    }
    std::map<long long, int> key_class;
    for (size_t c = 0; c < report.classes.size(); ++c) {
        if (!key_class.emplace(report.class_keys[c], static_cast<int>(c)).second)
            throw WindowTooSmall("window failed to connect an invariant class");
    }

    switch (family) {
        case LieFamily::SU2: report.invariant = "parity of 2l"; break;
        case LieFamily::SO3: report.invariant = "constant"; break;
        case LieFamily::O3: report.invariant = "parity epsilon"; break;
        case LieFamily::U2: report.invariant = "charge m"; break;
    }

    // Stability: in-window fusion outputs always land in the class predicted
    // by the key arithmetic of the input classes.
    report.stable = true;
    for (int i = 0; i < n && report.stable; ++i)
        for (int j = 0; j < n && report.stable; ++j) {
            long long want = invariant_key(report.labels[i]) + invariant_key(report.labels[j]);
            if (family == LieFamily::SU2 || family == LieFamily::O3) want %= 2;
            for (const LieLabel& c : lie_fusion(report.labels[i], report.labels[j])) {
                auto it = pos.find(c);
                if (it == pos.end()) continue;
                if (report.class_keys[report.partition[it->second]] != want) report.stable = false;
            }
        }

    switch (family) {
        case LieFamily::SU2:
        case LieFamily::O3: report.group_name = "Z2"; break;
        case LieFamily::SO3: report.group_name = "trivial"; break;
        case LieFamily::U2: report.group_name = "Z"; break;
    }
    return report;
}

}  // namespace chainlab
