#include "chainlab/center_action.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "chainlab/errors.hpp"

namespace chainlab {

bool ChainHomomorphism::trivial_on(int class_id) const {
    const Permutation& p = perms.at(class_id);
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) return false;
    return true;
}

namespace {

Permutation identity_perm(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

void check_perm(const Permutation& p, int n) {
    if (static_cast<int>(p.size()) != n)
        throw Error(ErrorCode::Domain, "permutation size does not match gamma size");
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) throw Error(ErrorCode::Domain, "not a permutation of Gamma");
        seen[v] = 1;
    }
}

}  // namespace

ChainHomomorphism chain_homomorphism(const FusionRing& ring, int gamma_size,
                                     const std::map<int, Permutation>& assignment) {
    if (gamma_size < 1) throw Error(ErrorCode::Domain, "gamma size must be at least 1");
    ChainHomomorphism h;
    h.chain = chain_group(ring);
    h.dims = ring.dims;
    h.gamma_size = gamma_size;
    h.perms.assign(h.chain.num_classes(), identity_perm(gamma_size));
    for (const auto& [cls, perm] : assignment) {
        if (cls < 0 || cls >= h.chain.num_classes())
            throw Error(ErrorCode::Domain, "chain class id out of range: " + std::to_string(cls));
        check_perm(perm, gamma_size);
        h.perms[cls] = perm;
    }
    if (!h.trivial_on(h.chain.identity_class))
        throw Error(ErrorCode::Domain, "identity chain class must act trivially");
    for (int c1 = 0; c1 < h.chain.num_classes(); ++c1)
        for (int c2 = 0; c2 < h.chain.num_classes(); ++c2) {
            const Permutation composed = compose(h.perms[c1], h.perms[c2]);
            if (h.perms[h.chain.product[c1][c2]] != composed)
                throw Error(ErrorCode::Domain,
                            "assignment is not a homomorphism at classes " + std::to_string(c1) +
                                ", " + std::to_string(c2));
        }
    return h;
}

ChainHomomorphism trivial_homomorphism(const FusionRing& ring, int gamma_size) {
    return chain_homomorphism(ring, gamma_size, {});
}

long long MultiplicityVector::total_dimension(const std::vector<int>& dims) const {
    long long d = 0;
    for (size_t i = 0; i < mult.size(); ++i) d += static_cast<long long>(mult[i]) * dims.at(i);
    return d;
}

Eigen::VectorXcd permuted_function(const Permutation& p, const Eigen::VectorXcd& z) {
    Eigen::VectorXcd out(z.size());
    for (int i = 0; i < z.size(); ++i) out[p[i]] = z[i];
    return out;
}

CentralActionResult action_on_center(const MultiplicityVector& lambda, const ChainHomomorphism& h,
                                     const Eigen::VectorXcd& z, double tol) {
    const int rank = static_cast<int>(h.dims.size());
    if (static_cast<int>(lambda.mult.size()) > rank)
        throw UnknownIrrep("multiplicity vector refers to irreps outside the ring");
    if (z.size() != h.gamma_size)
        throw Error(ErrorCode::Domain, "function length does not match gamma size");

    CentralActionResult result;
    std::vector<long long> weight(h.chain.num_classes(), 0);
    for (size_t i = 0; i < lambda.mult.size(); ++i) {
        if (lambda.mult[i] < 0) throw Error(ErrorCode::Domain, "negative multiplicity");
        if (lambda.mult[i] == 0) continue;
        weight[h.chain.partition[i]] += static_cast<long long>(lambda.mult[i]) * h.dims[i];
    }
    for (int c = 0; c < h.chain.num_classes(); ++c) {
        if (weight[c] == 0) continue;
        result.entries.push_back({c, permuted_function(h.perms[c], z), weight[c]});
        result.total_weight += weight[c];
    }
    if (result.entries.empty()) throw Error(ErrorCode::Domain, "empty multiplicity vector");
    result.central = true;
    for (const auto& e : result.entries)
        if ((e.transformed - result.entries[0].transformed).cwiseAbs().maxCoeff() > tol)
            result.central = false;
    return result;
}

ConsistencyResult composition_consistency(const MultiplicityVector& lambda,
                                          const MultiplicityVector& mu, const ChainHomomorphism& h,
                                          const FusionRing& ring, const Eigen::VectorXcd& z,
                                          double tol) {
    ConsistencyResult res;
    const int rank = ring.rank;

    std::vector<long long> nu(rank, 0);
    for (int i = 0; i < rank; ++i) {
        int li = i < static_cast<int>(lambda.mult.size()) ? lambda.mult[i] : 0;
        if (li == 0) continue;
        for (int j = 0; j < rank; ++j) {
            int mj = j < static_cast<int>(mu.mult.size()) ? mu.mult[j] : 0;
            if (mj == 0) continue;
            for (int k = 0; k < rank; ++k)
                nu[k] += static_cast<long long>(li) * mj * ring.coeff(i, j, k);
        }
    }

    std::set<int> lambda_classes, mu_classes, nu_classes, expected;
    for (int i = 0; i < rank; ++i) {
        if (i < static_cast<int>(lambda.mult.size()) && lambda.mult[i] > 0)
            lambda_classes.insert(h.chain.partition[i]);
        if (i < static_cast<int>(mu.mult.size()) && mu.mult[i] > 0)
            mu_classes.insert(h.chain.partition[i]);
        if (nu[i] > 0) nu_classes.insert(h.chain.partition[i]);
    }
    for (int c1 : lambda_classes)
        for (int c2 : mu_classes) expected.insert(h.chain.product[c1][c2]);
    if (nu_classes != expected) {
        res.ok = false;
        res.counterexample = "classes of the composition differ from pairwise class products";
        return res;
    }
    for (int c1 : lambda_classes)
        for (int c2 : mu_classes) {
            Eigen::VectorXcd via_product = permuted_function(h.perms[h.chain.product[c1][c2]], z);
            Eigen::VectorXcd via_compose =
                permuted_function(h.perms[c1], permuted_function(h.perms[c2], z));
            if ((via_product - via_compose).cwiseAbs().maxCoeff() > tol) {
                res.ok = false;
                res.counterexample = "permutations fail to compose at classes " +
                                     std::to_string(c1) + ", " + std::to_string(c2);
                return res;
            }
        }
    return res;
}

namespace {

MatrixOverGamma permuted_matrix(const Permutation& p, const MatrixOverGamma& m) {
    MatrixOverGamma out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[p[i]] = m[i];
    return out;
}

void check_pointwise_unitary(const MatrixOverGamma& m, int gamma_size, double tol,
                             const char* which) {
    if (static_cast<int>(m.size()) != gamma_size)
        throw NotUnitary(std::string(which) + " has wrong number of Gamma slices");
    for (const auto& slice : m) {
        if (slice.rows() != slice.cols() || slice.rows() == 0)
            throw NotUnitary(std::string(which) + " slices must be square");
        Eigen::MatrixXcd should_be_id = slice * slice.adjoint();
        should_be_id -= Eigen::MatrixXcd::Identity(slice.rows(), slice.cols());
        if (should_be_id.cwiseAbs().maxCoeff() > tol)
            throw NotUnitary(std::string(which) + " is not pointwise unitary");
    }
}

}  // namespace

bool symmetry_obstruction(const ChainHomomorphism& h, int class_a, int class_b,
                          const MatrixOverGamma& z_a, const MatrixOverGamma& z_b, double tol) {
    if (class_a < 0 || class_a >= h.chain.num_classes() || class_b < 0 ||
        class_b >= h.chain.num_classes())
        throw Error(ErrorCode::Domain, "chain class id out of range");
    check_pointwise_unitary(z_a, h.gamma_size, tol, "Z_A");
    check_pointwise_unitary(z_b, h.gamma_size, tol, "Z_B");

    MatrixOverGamma moved_a = permuted_matrix(h.perms[class_b], z_a);
    for (int g = 0; g < h.gamma_size; ++g) {
        Eigen::MatrixXcd lhs = moved_a[g] * z_a[g].adjoint();
        lhs -= Eigen::MatrixXcd::Identity(lhs.rows(), lhs.cols());
        if (lhs.cwiseAbs().maxCoeff() > tol) return false;
    }
    MatrixOverGamma z_b_star(z_b.size());
    for (size_t g = 0; g < z_b.size(); ++g) z_b_star[g] = z_b[g].adjoint();
    MatrixOverGamma moved_b = permuted_matrix(h.perms[class_a], z_b_star);
    for (int g = 0; g < h.gamma_size; ++g) {
        Eigen::MatrixXcd lhs = z_b[g] * moved_b[g];
        lhs -= Eigen::MatrixXcd::Identity(lhs.rows(), lhs.cols());
        if (lhs.cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

long long admissible_arrow_rank(const MultiplicityVector& sigma, const MultiplicityVector& tau) {
    long long rank = 0;
    size_t n = std::min(sigma.mult.size(), tau.mult.size());
    for (size_t i = 0; i < n; ++i)
        rank += static_cast<long long>(sigma.mult[i]) * tau.mult[i];
    return rank;
}

}  // namespace chainlab
