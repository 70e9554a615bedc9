#ifndef CHAINLAB_FUSION_RING_HPP
#define CHAINLAB_FUSION_RING_HPP

#include <string>
#include <vector>

#include "chainlab/character_table.hpp"

namespace chainlab {

/// Tensor-product decomposition data of a group dual: nonnegative integer
/// structure constants N[i][j][k] = multiplicity of irrep k in i x j,
/// the conjugation involution and the dimension vector.
struct FusionRing {
    int rank = 0;
    std::vector<int> n;     // rank^3, (i*rank + j)*rank + k
    std::vector<int> conj;  // irrep -> conjugate irrep
    std::vector<int> dims;

    int coeff(int i, int j, int k) const { return n[(i * rank + j) * rank + k]; }
    std::vector<int> support(int i, int j) const;
};

/// Structure constants via character inner products over conjugacy classes.
/// Every coefficient must round to a nonnegative integer within
/// `integer_tol`; otherwise NumericalResidual is thrown.
FusionRing fusion_coefficients(const CharacterTable& t, double integer_tol = 1e-6);

/// Set-level fusion: union of supports of all pairwise products.
std::vector<int> product_support(const std::vector<int>& s1, const std::vector<int>& s2,
                                 const FusionRing& r);

/// Dimension-function report: d(trivial) = 1, conjugation-invariance,
/// the product rule sum_k N[i][j][k] d_k = d_i d_j, and multiplicativity on
/// randomly generated composite multiplicity vectors.
struct DimensionReport {
    bool ok = true;
    std::vector<std::string> violations;
};
DimensionReport dimension_checks(const FusionRing& r, int random_trials = 32,
                                 unsigned long long seed = 0x01D5EEDULL);

}  // namespace chainlab

#endif
