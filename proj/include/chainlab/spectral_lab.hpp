#ifndef CHAINLAB_SPECTRAL_LAB_HPP
#define CHAINLAB_SPECTRAL_LAB_HPP

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "chainlab/character_table.hpp"
#include "chainlab/finite_group.hpp"

namespace chainlab {

/// A finite group acting by conjugation with a unitary representation on a
/// C*-algebra F of block-diagonal matrices (a full matrix algebra, or a
/// direct sum of two full blocks for the non-minimal example).
struct MatrixDynamicalSystem {
    FiniteGroup group;
    std::vector<Eigen::MatrixXcd> rep;        // one unitary per group element
    int n = 0;                                // ambient matrix dimension
    std::vector<std::pair<int, int>> blocks;  // (offset, size) per full block
};

/// Left regular representation of g on C^|G| acting on the full matrix
/// algebra M_|G|.
MatrixDynamicalSystem regular_system(const FiniteGroup& g);

/// Z_2 swapping two full blocks of the given size inside M_{2b}.
MatrixDynamicalSystem swap_block_system(int block_size);

/// Validates unitarity, the homomorphism property and invariance of the
/// block algebra under the action; throws NumericalResidual on failure.
void validate_system(const MatrixDynamicalSystem& sys, double tol = 1e-9);

/// Hilbert-Schmidt-orthonormal basis of a *-closed unital subspace of F.
struct Subalgebra {
    std::vector<Eigen::MatrixXcd> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

struct ParsevalResult {
    double parseval_residual = 0;        // | <F,F>_A - sum_D <Pi_D F, Pi_D F>_A |
    double reconstruction_residual = 0;  // | F - sum_D Pi_D F |
};

struct MinimalityReport {
    int dim_fixed = 0;
    int dim_commutant = 0;
    int dim_center = 0;
    bool minimal = false;  // A' cap F = Z(A)
};

struct NormBoundReport {
    int samples = 0;
    double max_operator_excess = 0;  // max over D, F of |Pi_D F| - d^{3/2} |F|
    double max_a_norm_excess = 0;    // max over D, F of |Pi_D F|_A - |F|_A
    bool ok = false;
};

struct DisjointnessReport {
    std::vector<int> missing_hilbert_spaces;      // irreps with no unitary generator
    std::vector<std::vector<int>> intertwiner_dim;  // dual x dual
    bool pairwise_disjoint = false;               // off-diagonal spaces all zero
    bool minimal = false;
    bool biconditional_holds = false;             // minimal <=> disjoint
};

/// Numerical realization of the spectral calculus of a matrix dynamical
/// system: projections, the A-valued scalar product, fixed points,
/// commutants, algebraic Hilbert spaces (abelian case), canonical
/// endomorphisms and intertwiners.
class SpectralLab {
public:
    explicit SpectralLab(MatrixDynamicalSystem sys, double tol = 1e-9);

    const MatrixDynamicalSystem& system() const { return sys_; }
    const CharacterTable& table() const { return table_; }
    int dual_size() const { return table_.rank(); }
    int algebra_dim() const { return static_cast<int>(f_basis_.size()); }

    Eigen::MatrixXcd act(int g, const Eigen::MatrixXcd& f) const;

    /// Group-averaged spectral projection onto the D-isotypic subspace.
    Eigen::MatrixXcd project(int irrep, const Eigen::MatrixXcd& f) const;

    /// <F,G>_A = Pi_trivial(F G*).
    Eigen::MatrixXcd a_scalar_product(const Eigen::MatrixXcd& f, const Eigen::MatrixXcd& g) const;
    double a_norm(const Eigen::MatrixXcd& f) const;

    Eigen::MatrixXcd random_element(std::mt19937_64& rng) const;

    ParsevalResult parseval_check(const Eigen::MatrixXcd& f) const;

    Subalgebra fixed_point_algebra() const;
    Subalgebra relative_commutant() const;
    Subalgebra algebra_center(const Subalgebra& a) const;
    MinimalityReport minimality_report() const;

    /// A unitary generator of the one-dimensional algebraic Hilbert space of
    /// the given character, when one exists inside Pi_D F. Requires an
    /// abelian group (NonAbelianGroup otherwise; in finite dimension a
    /// higher-dimensional space of isometries with support 1 cannot exist).
    std::optional<Eigen::MatrixXcd> algebraic_hilbert_space(
        int irrep, unsigned long long seed = 0xA15EEDULL) const;

    /// rho(a) = phi a phi*. Throws NotInvariant unless rho maps span(a) into
    /// itself within tolerance.
    Eigen::MatrixXcd apply_endomorphism(const Eigen::MatrixXcd& phi,
                                        const Eigen::MatrixXcd& a) const;
    void check_endomorphism_invariance(const Eigen::MatrixXcd& phi, const Subalgebra& a) const;

    /// Basis of (rho, sigma) = {X in A : X rho(a) = sigma(a) X} for canonical
    /// endomorphisms given by their generating unitaries.
    std::vector<Eigen::MatrixXcd> intertwiner_space(const Eigen::MatrixXcd& phi_rho,
                                                    const Eigen::MatrixXcd& phi_sigma,
                                                    const Subalgebra& a) const;

    NormBoundReport norm_bound_check(int samples = 100,
                                     unsigned long long seed = 0xB0B5EEDULL) const;

    /// Minimality vs pairwise disjointness of the canonical endomorphisms,
    /// for abelian systems where the algebraic Hilbert spaces exist.
    DisjointnessReport disjointness_report(unsigned long long seed = 0xD15EEDULL) const;

    Eigen::VectorXcd to_coords(const Eigen::MatrixXcd& f) const;
    Eigen::MatrixXcd from_coords(const Eigen::VectorXcd& coords) const;

private:
    MatrixDynamicalSystem sys_;
    CharacterTable table_;
    std::vector<Eigen::MatrixXcd> f_basis_;  // matrix units of the blocks
    double tol_;
};

double operator_norm(const Eigen::MatrixXcd& m);

}  // namespace chainlab

#endif
