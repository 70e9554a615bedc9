#include "chainlab/chain_group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "chainlab/errors.hpp"

namespace chainlab {

namespace {

struct UnionFind {
    std::vector<int> parent, size;

    explicit UnionFind(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

std::vector<std::vector<int>> members_by_root(UnionFind& uf, int n) {
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

// Relabel a union-find partition so class ids follow the smallest member.
std::vector<int> canonical_labels(UnionFind& uf, int n) {
    std::vector<int> roots;
    for (int i = 0; i < n; ++i)
        if (uf.find(i) == i) roots.push_back(i);
    std::vector<int> min_member(n, n);
    for (int i = 0; i < n; ++i) min_member[uf.find(i)] = std::min(min_member[uf.find(i)], i);
    std::sort(roots.begin(), roots.end(),
              [&](int a, int b) { return min_member[a] < min_member[b]; });
    std::vector<int> label_of_root(n, -1);
    for (size_t c = 0; c < roots.size(); ++c) label_of_root[roots[c]] = static_cast<int>(c);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = label_of_root[uf.find(i)];
    return labels;
}

}  // namespace

std::vector<int> chain_partition(const FusionRing& r) {
    UnionFind uf(r.rank);
    bool changed = true;
    while (changed) {
        changed = false;
        auto classes = members_by_root(uf, r.rank);
        for (const auto& p : classes)
            for (const auto& q : classes) {
                int first = -1;
                for (int a : p)
                    for (int b : q)
                        for (int k = 0; k < r.rank; ++k) {
                            if (r.coeff(a, b, k) == 0) continue;
                            if (first < 0)
                                first = k;
                            else if (uf.unite(first, k))
                                changed = true;
                        }
            }
    }
    return canonical_labels(uf, r.rank);
}

ChainGroup chain_group(const FusionRing& r) {
    ChainGroup cg;
    cg.partition = chain_partition(r);
    int nc = *std::max_element(cg.partition.begin(), cg.partition.end()) + 1;
    cg.classes.assign(nc, {});
    for (int i = 0; i < r.rank; ++i) cg.classes[cg.partition[i]].push_back(i);

    cg.product.assign(nc, std::vector<int>(nc, -1));
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = 0; c2 < nc; ++c2) {
            int target = -1;
            for (int a : cg.classes[c1])
                for (int b : cg.classes[c2])
                    for (int k = 0; k < r.rank; ++k) {
                        if (r.coeff(a, b, k) == 0) continue;
                        if (target < 0) target = cg.partition[k];
                        if (cg.partition[k] != target)
                            throw WellDefinednessViolation(
                                "fusion product straddles chain classes " + std::to_string(target) +
                                " and " + std::to_string(cg.partition[k]));
                    }
            if (target < 0)
                throw WellDefinednessViolation("empty fusion support for a class pair");
            cg.product[c1][c2] = target;
        }

    cg.identity_class = cg.partition[0];
    cg.inverse.assign(nc, -1);
    for (int c = 0; c < nc; ++c) {
        for (int a : cg.classes[c]) {
            int inv_class = cg.partition[r.conj[a]];
            if (cg.inverse[c] < 0)
                cg.inverse[c] = inv_class;
            else if (cg.inverse[c] != inv_class)
                throw WellDefinednessViolation("conjugation is not constant on a chain class");
        }
        if (cg.product[c][cg.inverse[c]] != cg.identity_class)
            throw WellDefinednessViolation("conjugate class is not the inverse class");
    }

    cg.invariant_factors = classify_abelian(cg.product, cg.identity_class);
    return cg;
}

std::vector<int> classify_abelian(const std::vector<std::vector<int>>& product, int identity) {
    return invariant_factors(product, identity);
}

EtaCertificate eta_check(const FiniteGroup& g, double tol) {
    auto t = character_table(g);
    auto r = fusion_coefficients(t);
    return eta_check(t, r, tol);
}

EtaCertificate eta_check(const CharacterTable& t, const FusionRing& r, double tol) {
    EtaCertificate cert;
    cert.chain = chain_group(r);
    cert.dual = dual_of_center(t.group);
    const auto& z = cert.dual.center_elements;
    const int nc = cert.chain.num_classes();
    const int nz = static_cast<int>(z.size());

    // Central character vectors per irrep; must be constant on chain classes.
    std::vector<Eigen::VectorXcd> upsilon(r.rank, Eigen::VectorXcd(nz));
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < nz; ++j) upsilon[i][j] = central_character(t, i, z[j]);

    cert.pairing.resize(nc, nz);
    cert.constant_on_classes = true;
    for (int c = 0; c < nc; ++c) {
        const auto& members = cert.chain.classes[c];
        for (int a : members)
            if ((upsilon[a] - upsilon[members[0]]).cwiseAbs().maxCoeff() > tol)
                cert.constant_on_classes = false;
        cert.pairing.row(c) = upsilon[members[0]].transpose();
    }
    if (!cert.constant_on_classes)
        throw TheoremViolation("central character is not constant on a chain class");

    cert.homomorphism = true;
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = 0; c2 < nc; ++c2) {
            Eigen::VectorXcd prod = cert.pairing.row(c1).cwiseProduct(cert.pairing.row(c2));
            if ((cert.pairing.row(cert.chain.product[c1][c2]) - prod.transpose()).cwiseAbs().maxCoeff() >
                tol)
                cert.homomorphism = false;
        }
    if (!cert.homomorphism)
        throw TheoremViolation("class -> central character is not a homomorphism");

    // Match each chain class with a character of the center; the map must be
    // a bijection compatible with the group laws.
    cert.eta.assign(nc, -1);
    std::vector<char> hit(cert.dual.group.order, 0);
    bool bij = (nc == cert.dual.group.order);
    for (int c = 0; c < nc && bij; ++c) {
        for (int j = 0; j < cert.dual.group.order; ++j) {
            if ((cert.pairing.row(c) - cert.dual.pairing.row(j)).cwiseAbs().maxCoeff() < tol) {
                cert.eta[c] = j;
                break;
            }
        }
        if (cert.eta[c] < 0 || hit[cert.eta[c]]) bij = false;
        if (cert.eta[c] >= 0) hit[cert.eta[c]] = 1;
    }
    for (int c1 = 0; c1 < nc && bij; ++c1)
        for (int c2 = 0; c2 < nc && bij; ++c2)
            if (cert.eta[cert.chain.product[c1][c2]] !=
                cert.dual.group.mul[cert.eta[c1]][cert.eta[c2]])
                bij = false;
    cert.bijective = bij;
    if (!cert.bijective)
        throw TheoremViolation("chain group is not isomorphic to the dual of the center");
    return cert;
}

}  // namespace chainlab
