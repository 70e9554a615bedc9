#ifndef CHAINLAB_CHARACTER_TABLE_HPP
#define CHAINLAB_CHARACTER_TABLE_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "chainlab/finite_group.hpp"

namespace chainlab {

using Complex = std::complex<double>;

struct Irrep {
    int dim = 0;
    Eigen::VectorXcd values;  // one value per conjugacy class, canonical class order
};

/// Complex character table of a finite group. Irrep 0 is the trivial
/// character; the rest are ordered by ascending dimension, then
/// lexicographically by rounded value vectors, so indices are stable
/// across runs.
struct CharacterTable {
    FiniteGroup group;
    std::vector<Irrep> irreps;

    int rank() const { return static_cast<int>(irreps.size()); }
    Complex value(int irrep, int element) const {
        return irreps[irrep].values[group.class_of[element]];
    }
};

struct DixonOptions {
    unsigned long long seed = 0x5EED0001ULL;
    int max_redraws = 32;
    double residual_tol = 1e-6;
};

/// Character table via the class-matrix method: simultaneously diagonalize a
/// random real combination of the class-sum multiplication matrices and read
/// the central characters off the eigenvectors. Throws DegenerateSpectrum if
/// the random combination keeps failing to separate eigenspaces, and
/// NumericalResidual if orthogonality or integrality residuals exceed
/// tolerance.
CharacterTable character_table(const FiniteGroup& g, const DixonOptions& opts = {});

/// The scalar by which the central element c acts in irrep D, i.e.
/// chi_D(c) / chi_D(e). Unit modulus; throws NotCentral if c is not central.
Complex central_character(const CharacterTable& t, int irrep, int element);

/// The character group of center(G), with an explicit pairing.
struct DualGroup {
    FiniteGroup group;                 // abelian; element 0 is the trivial character
    std::vector<int> center_elements;  // element indices of G forming its center
    Eigen::MatrixXcd pairing;          // pairing(i, j) = chi_i(center_elements[j])
};

DualGroup dual_of_center(const FiniteGroup& g);

}  // namespace chainlab

#endif
