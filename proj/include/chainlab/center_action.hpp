#ifndef CHAINLAB_CENTER_ACTION_HPP
#define CHAINLAB_CENTER_ACTION_HPP

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "chainlab/chain_group.hpp"
#include "chainlab/finite_group.hpp"
#include "chainlab/fusion_ring.hpp"

namespace chainlab {

/// The commutative algebra is modeled as functions on a finite set Gamma;
/// its automorphisms are exactly the point permutations, so a homomorphism
/// from the chain group into aut(Z) is a permutation per chain class.
struct ChainHomomorphism {
    ChainGroup chain;
    std::vector<int> dims;           // irrep dimensions of the underlying ring
    int gamma_size = 1;
    std::vector<Permutation> perms;  // one permutation of {0..gamma_size-1} per class

    bool trivial_on(int class_id) const;
};

/// Builds and validates a homomorphism: unassigned classes act trivially, the
/// identity class must act trivially, and h(c1 (x) c2) = h(c1) h(c2) must
/// hold on the whole product table.
ChainHomomorphism chain_homomorphism(const FusionRing& ring, int gamma_size,
                                     const std::map<int, Permutation>& assignment);

ChainHomomorphism trivial_homomorphism(const FusionRing& ring, int gamma_size);

/// Decomposition multiplicities of a (reducible) object, indexed by irrep.
struct MultiplicityVector {
    std::vector<int> mult;

    long long total_dimension(const std::vector<int>& dims) const;
};

/// alpha(Z) = Z o p^{-1} for the class permutation p.
Eigen::VectorXcd permuted_function(const Permutation& p, const Eigen::VectorXcd& z);

/// One term of the isotypical action formula: the class, the transformed
/// function, and the aggregated weight sum_{D in class} m(D) d(D).
struct CentralActionEntry {
    int class_id = 0;
    Eigen::VectorXcd transformed;
    long long weight = 0;
};

struct CentralActionResult {
    std::vector<CentralActionEntry> entries;  // ascending class id
    long long total_weight = 0;               // equals d(lambda)
    bool central = false;                     // all transformed functions agree
};

/// Action of a reducible object on the center: one entry per chain class
/// meeting the support of lambda. Throws UnknownIrrep if lambda refers to an
/// irrep outside the ring.
CentralActionResult action_on_center(const MultiplicityVector& lambda, const ChainHomomorphism& h,
                                     const Eigen::VectorXcd& z, double tol = 1e-9);

/// Checks that composing objects composes their central actions: the chain
/// classes of lambda o mu are exactly the pairwise class products, and the
/// class permutations compose accordingly (verified on the sampled function).
struct ConsistencyResult {
    bool ok = true;
    std::string counterexample;
};
ConsistencyResult composition_consistency(const MultiplicityVector& lambda,
                                          const MultiplicityVector& mu, const ChainHomomorphism& h,
                                          const FusionRing& ring, const Eigen::VectorXcd& z,
                                          double tol = 1e-9);

/// A unitary matrix over the function algebra: one numeric matrix per point
/// of Gamma.
using MatrixOverGamma = std::vector<Eigen::MatrixXcd>;

/// Whether a module-basis change by the unitaries z_a, z_b leaves the
/// permutation symmetry unchanged: alpha_B(z_a) z_a^* = 1 and
/// z_b alpha_A(z_b^*) = 1 pointwise. Throws NotUnitary if either matrix
/// fails pointwise unitarity.
bool symmetry_obstruction(const ChainHomomorphism& h, int class_a, int class_b,
                          const MatrixOverGamma& z_a, const MatrixOverGamma& z_b,
                          double tol = 1e-9);

/// Free-module rank of the intertwiner space (sigma, tau) over sigma(Z):
/// sum_rho m(rho, sigma) m(rho, tau).
long long admissible_arrow_rank(const MultiplicityVector& sigma, const MultiplicityVector& tau);

}  // namespace chainlab

#endif
