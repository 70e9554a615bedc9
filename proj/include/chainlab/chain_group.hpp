#ifndef CHAINLAB_CHAIN_GROUP_HPP
#define CHAINLAB_CHAIN_GROUP_HPP

#include <Eigen/Dense>
#include <vector>

#include "chainlab/character_table.hpp"
#include "chainlab/fusion_ring.hpp"

namespace chainlab {

/// Partition of the dual into chain classes, with the induced abelian group
/// structure. Class ids are canonical: classes are numbered in order of their
/// smallest member irrep, so the class of the trivial irrep is always 0.
struct ChainGroup {
    std::vector<int> partition;             // irrep -> class id
    std::vector<std::vector<int>> classes;  // class id -> sorted member irreps
    std::vector<std::vector<int>> product;  // class x class -> class
    int identity_class = 0;
    std::vector<int> inverse;               // class -> class of conjugates
    std::vector<int> invariant_factors;     // d1 | d2 | ... (ascending)

    int num_classes() const { return static_cast<int>(classes.size()); }
};

/// Finest partition of the dual such that the full fusion support of any two
/// classes lands inside one class, computed by a union-find fixpoint over
/// class pairs. This equals the chain equivalence: every merge is witnessed
/// by a chain of tensor products, and every chain stays inside one fixpoint
/// class.
std::vector<int> chain_partition(const FusionRing& r);

/// The partition together with the class product [A][B] = [any element of
/// A x B], the unit, inverses via conjugation, and the abelian invariant
/// factors. Throws WellDefinednessViolation if a fusion product straddles two
/// classes after the fixpoint (unreachable unless the fixpoint is buggy).
ChainGroup chain_group(const FusionRing& r);

/// Invariant factors d1 | d2 | ... of a commutative group table; throws
/// NotAGroup when the table fails the group axioms.
std::vector<int> classify_abelian(const std::vector<std::vector<int>>& product, int identity);

/// Verification certificate for the isomorphism between the chain group and
/// the character group of the center: the central character is constant on
/// each chain class, and class -> central character is a bijective
/// homomorphism onto the dual of the center. Throws TheoremViolation if any
/// part fails; on success the returned pairing table is the machine-checkable
/// witness.
struct EtaCertificate {
    ChainGroup chain;
    DualGroup dual;
    Eigen::MatrixXcd pairing;  // chain class x center element -> Upsilon value
    std::vector<int> eta;      // chain class -> dual element index
    bool constant_on_classes = false;
    bool homomorphism = false;
    bool bijective = false;

    bool ok() const { return constant_on_classes && homomorphism && bijective; }
};

EtaCertificate eta_check(const FiniteGroup& g, double tol = 1e-9);

/// Variant that reuses an already computed table/ring (the table must belong
/// to the same group).
EtaCertificate eta_check(const CharacterTable& t, const FusionRing& r, double tol = 1e-9);

}  // namespace chainlab

#endif
