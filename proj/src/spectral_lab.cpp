#include "chainlab/spectral_lab.hpp"

#include <algorithm>
#include <cmath>

#include "chainlab/errors.hpp"
#include "chainlab/random_matrices.hpp"

namespace chainlab {

double operator_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()[0];
}

MatrixDynamicalSystem regular_system(const FiniteGroup& g) {
    MatrixDynamicalSystem sys;
    sys.group = g;
    sys.n = g.order;
    sys.blocks = {{0, g.order}};
    sys.rep.reserve(g.order);
    for (int x = 0; x < g.order; ++x) {
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(g.order, g.order);
        for (int h = 0; h < g.order; ++h) u(g.mul[x][h], h) = 1.0;
        sys.rep.push_back(std::move(u));
    }
    return sys;
}

MatrixDynamicalSystem swap_block_system(int block_size) {
    if (block_size < 1) throw Error(ErrorCode::Domain, "block size must be positive");
    MatrixDynamicalSystem sys;
    sys.group = cyclic(2);
    sys.n = 2 * block_size;
    sys.blocks = {{0, block_size}, {block_size, block_size}};
    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(sys.n, sys.n);
    for (int i = 0; i < block_size; ++i) {
        swap(i, block_size + i) = 1.0;
        swap(block_size + i, i) = 1.0;
    }
    sys.rep = {Eigen::MatrixXcd::Identity(sys.n, sys.n), std::move(swap)};
    return sys;
}

namespace {

std::vector<Eigen::MatrixXcd> block_matrix_units(const MatrixDynamicalSystem& sys) {
    std::vector<Eigen::MatrixXcd> basis;
    for (auto [offset, size] : sys.blocks)
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(sys.n, sys.n);
                e(offset + i, offset + j) = 1.0;
                basis.push_back(std::move(e));
            }
    return basis;
}

// Orthonormal basis of the column span, with rank decided by the singular
// value cutoff.
std::vector<Eigen::VectorXcd> orthonormal_range(const Eigen::MatrixXcd& columns, double tol) {
    if (columns.cols() == 0) return {};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(columns, Eigen::ComputeThinU);
    double cutoff = tol * std::max(1.0, svd.singularValues()[0]);
    std::vector<Eigen::VectorXcd> basis;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > cutoff) basis.push_back(svd.matrixU().col(i));
    return basis;
}

// Orthonormal basis of the right null space of a stacked constraint matrix.
std::vector<Eigen::VectorXcd> nullspace(const Eigen::MatrixXcd& constraints, double tol) {
    if (constraints.rows() == 0) {
        std::vector<Eigen::VectorXcd> all;
        for (int i = 0; i < constraints.cols(); ++i)
            all.push_back(Eigen::VectorXcd::Unit(constraints.cols(), i));
        return all;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(constraints, Eigen::ComputeFullV);
    double cutoff = tol * std::max(1.0, svd.singularValues().size() > 0 ? svd.singularValues()[0] : 1.0);
    std::vector<Eigen::VectorXcd> basis;
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > cutoff) ++rank;
    for (int i = rank; i < constraints.cols(); ++i) basis.push_back(svd.matrixV().col(i));
    return basis;
}

}  // namespace

void validate_system(const MatrixDynamicalSystem& sys, double tol) {
    if (sys.n <= 0 || sys.rep.size() != static_cast<size_t>(sys.group.order))
        throw Error(ErrorCode::Domain, "system needs one matrix per group element");
    int covered = 0;
    for (auto [offset, size] : sys.blocks) {
        if (offset != covered || size <= 0) throw Error(ErrorCode::Domain, "blocks must tile [0,n)");
        covered += size;
    }
    if (covered != sys.n) throw Error(ErrorCode::Domain, "blocks must tile [0,n)");
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(sys.n, sys.n);
    if ((sys.rep[0] - id).cwiseAbs().maxCoeff() > tol)
        throw NumericalResidual("rep(identity) is not the identity matrix");
    for (const auto& u : sys.rep) {
        if (u.rows() != sys.n || u.cols() != sys.n)
            throw Error(ErrorCode::Domain, "representation matrices must be n x n");
        if ((u * u.adjoint() - id).cwiseAbs().maxCoeff() > tol)
            throw NumericalResidual("representation matrix is not unitary");
    }
    for (int x = 0; x < sys.group.order; ++x)
        for (int y = 0; y < sys.group.order; ++y)
            if ((sys.rep[x] * sys.rep[y] - sys.rep[sys.group.mul[x][y]]).cwiseAbs().maxCoeff() > tol)
                throw NumericalResidual("matrices do not define a representation");
    // The action must preserve the block algebra.
    for (const auto& u : sys.rep)
        for (auto [offset, size] : sys.blocks)
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) {
                    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(sys.n, sys.n);
                    e(offset + i, offset + j) = 1.0;
                    Eigen::MatrixXcd moved = u * e * u.adjoint();
                    for (auto [o2, s2] : sys.blocks) moved.block(o2, o2, s2, s2).setZero();
                    if (moved.cwiseAbs().maxCoeff() > tol)
                        throw NumericalResidual("action does not preserve the block algebra");
                }
}

SpectralLab::SpectralLab(MatrixDynamicalSystem sys, double tol)
    : sys_(std::move(sys)), tol_(tol) {
    if (sys_.blocks.empty()) sys_.blocks = {{0, sys_.n}};
    validate_system(sys_, tol_);
    table_ = character_table(sys_.group);
    f_basis_ = block_matrix_units(sys_);
}

Eigen::MatrixXcd SpectralLab::act(int g, const Eigen::MatrixXcd& f) const {
    return sys_.rep[g] * f * sys_.rep[g].adjoint();
}

Eigen::MatrixXcd SpectralLab::project(int irrep, const Eigen::MatrixXcd& f) const {
    if (irrep < 0 || irrep >= table_.rank()) throw UnknownIrrep("irrep index out of range");
    const double dim = table_.irreps[irrep].dim;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(sys_.n, sys_.n);
    for (int g = 0; g < sys_.group.order; ++g)
        out += std::conj(table_.value(irrep, g)) * act(g, f);
    return (dim / static_cast<double>(sys_.group.order)) * out;
}

Eigen::MatrixXcd SpectralLab::a_scalar_product(const Eigen::MatrixXcd& f,
                                               const Eigen::MatrixXcd& g) const {
    return project(0, f * g.adjoint());
}

double SpectralLab::a_norm(const Eigen::MatrixXcd& f) const {
    return std::sqrt(operator_norm(a_scalar_product(f, f)));
}

Eigen::MatrixXcd SpectralLab::random_element(std::mt19937_64& rng) const {
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(sys_.n, sys_.n);
    for (auto [offset, size] : sys_.blocks)
        f.block(offset, offset, size, size) = random_complex_matrix(size, size, rng);
    return f;
}

ParsevalResult SpectralLab::parseval_check(const Eigen::MatrixXcd& f) const {
    ParsevalResult res;
    Eigen::MatrixXcd total = a_scalar_product(f, f);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(sys_.n, sys_.n);
    Eigen::MatrixXcd reconstruction = Eigen::MatrixXcd::Zero(sys_.n, sys_.n);
    for (int d = 0; d < table_.rank(); ++d) {
        Eigen::MatrixXcd fd = project(d, f);
        sum += a_scalar_product(fd, fd);
        reconstruction += fd;
    }
    res.parseval_residual = operator_norm(total - sum);
    res.reconstruction_residual = operator_norm(f - reconstruction);
    return res;
}

Subalgebra SpectralLab::fixed_point_algebra() const {
    const int dim_f = algebra_dim();
    Eigen::MatrixXcd columns(dim_f, dim_f);
    for (int k = 0; k < dim_f; ++k) columns.col(k) = to_coords(project(0, f_basis_[k]));
    Subalgebra a;
    for (const auto& v : orthonormal_range(columns, 1e-10)) a.basis.push_back(from_coords(v));
    return a;
}

Subalgebra SpectralLab::relative_commutant() const {
    Subalgebra a = fixed_point_algebra();
    const int dim_f = algebra_dim();
    Eigen::MatrixXcd constraints(static_cast<Eigen::Index>(a.dim()) * dim_f, dim_f);
    for (int m = 0; m < a.dim(); ++m)
        for (int k = 0; k < dim_f; ++k)
            constraints.block(static_cast<Eigen::Index>(m) * dim_f, k, dim_f, 1) =
                to_coords(a.basis[m] * f_basis_[k] - f_basis_[k] * a.basis[m]);
    Subalgebra out;
    for (const auto& v : nullspace(constraints, 1e-10)) out.basis.push_back(from_coords(v));
    return out;
}

Subalgebra SpectralLab::algebra_center(const Subalgebra& a) const {
    const int dim_f = algebra_dim();
    const int m = a.dim();
    Eigen::MatrixXcd constraints(static_cast<Eigen::Index>(m) * dim_f, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            constraints.block(static_cast<Eigen::Index>(i) * dim_f, j, dim_f, 1) =
                to_coords(a.basis[j] * a.basis[i] - a.basis[i] * a.basis[j]);
    Subalgebra out;
    for (const auto& v : nullspace(constraints, 1e-10)) {
        Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(sys_.n, sys_.n);
        for (int j = 0; j < m; ++j) x += v[j] * a.basis[j];
        out.basis.push_back(x);
    }
    return out;
}

MinimalityReport SpectralLab::minimality_report() const {
    MinimalityReport rep;
    Subalgebra a = fixed_point_algebra();
    Subalgebra commutant = relative_commutant();
    Subalgebra z = algebra_center(a);
    rep.dim_fixed = a.dim();
    rep.dim_commutant = commutant.dim();
    rep.dim_center = z.dim();
    // Z(A) is always contained in A' cap F, so equal dimensions mean equality.
    rep.minimal = rep.dim_commutant == rep.dim_center;
    return rep;
}

std::optional<Eigen::MatrixXcd> SpectralLab::algebraic_hilbert_space(
    int irrep, unsigned long long seed) const {
    if (!sys_.group.is_abelian())
        throw NonAbelianGroup(
            "algebraic Hilbert spaces with support 1 require one-dimensional characters: "
            "in finite dimension the isometries of a higher-dimensional space cannot have "
            "total support 1");
    if (irrep < 0 || irrep >= table_.rank()) throw UnknownIrrep("irrep index out of range");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Eigen::MatrixXcd x = project(irrep, random_element(rng));
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
        if (svd.singularValues().size() == 0) continue;
        double smin = svd.singularValues()[svd.singularValues().size() - 1];
        if (smin < 1e-8 * std::max(1.0, svd.singularValues()[0])) continue;
        Eigen::MatrixXcd phi = svd.matrixU() * svd.matrixV().adjoint();
        // The polar factor stays in Pi_D F; verify the covariance directly.
        bool good = true;
        for (int g = 0; g < sys_.group.order && good; ++g)
            if ((act(g, phi) - table_.value(irrep, g) * phi).cwiseAbs().maxCoeff() > tol_) good = false;
        if ((phi * phi.adjoint() - Eigen::MatrixXcd::Identity(sys_.n, sys_.n)).cwiseAbs().maxCoeff() >
            tol_)
            good = false;
        if (good) return phi;
    }
    return std::nullopt;
}

Eigen::MatrixXcd SpectralLab::apply_endomorphism(const Eigen::MatrixXcd& phi,
                                                 const Eigen::MatrixXcd& a) const {
    return phi * a * phi.adjoint();
}

void SpectralLab::check_endomorphism_invariance(const Eigen::MatrixXcd& phi,
                                                const Subalgebra& a) const {
    Eigen::MatrixXcd columns(algebra_dim(), a.dim());
    for (int k = 0; k < a.dim(); ++k) columns.col(k) = to_coords(a.basis[k]);
    for (int k = 0; k < a.dim(); ++k) {
        Eigen::VectorXcd image = to_coords(apply_endomorphism(phi, a.basis[k]));
        Eigen::VectorXcd residual = image - columns * (columns.adjoint() * image);
        if (residual.norm() > tol_ * std::max(1.0, image.norm()))
            throw NotInvariant("endomorphism does not preserve the subalgebra");
    }
}

std::vector<Eigen::MatrixXcd> SpectralLab::intertwiner_space(const Eigen::MatrixXcd& phi_rho,
                                                             const Eigen::MatrixXcd& phi_sigma,
                                                             const Subalgebra& a) const {
    check_endomorphism_invariance(phi_rho, a);
    check_endomorphism_invariance(phi_sigma, a);
    const int m = a.dim();
    const int dim_f = algebra_dim();
    Eigen::MatrixXcd constraints(static_cast<Eigen::Index>(m) * dim_f, m);
    for (int k = 0; k < m; ++k) {
        Eigen::MatrixXcd rho_a = apply_endomorphism(phi_rho, a.basis[k]);
        Eigen::MatrixXcd sigma_a = apply_endomorphism(phi_sigma, a.basis[k]);
        for (int j = 0; j < m; ++j)
            constraints.block(static_cast<Eigen::Index>(k) * dim_f, j, dim_f, 1) =
                to_coords(a.basis[j] * rho_a - sigma_a * a.basis[j]);
    }
    std::vector<Eigen::MatrixXcd> out;
    for (const auto& v : nullspace(constraints, 1e-10)) {
        Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(sys_.n, sys_.n);
        for (int j = 0; j < m; ++j) x += v[j] * a.basis[j];
        out.push_back(x);
    }
    return out;
}

NormBoundReport SpectralLab::norm_bound_check(int samples, unsigned long long seed) const {
    NormBoundReport rep;
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        Eigen::MatrixXcd f = random_element(rng);
        double norm_f = operator_norm(f);
        double anorm_f = a_norm(f);
        for (int d = 0; d < table_.rank(); ++d) {
            Eigen::MatrixXcd fd = project(d, f);
            double bound = std::pow(static_cast<double>(table_.irreps[d].dim), 1.5) * norm_f;
            rep.max_operator_excess = std::max(rep.max_operator_excess, operator_norm(fd) - bound);
            rep.max_a_norm_excess = std::max(rep.max_a_norm_excess, a_norm(fd) - anorm_f);
        }
    }
    rep.ok = rep.max_operator_excess <= tol_ && rep.max_a_norm_excess <= tol_;
    return rep;
}

DisjointnessReport SpectralLab::disjointness_report(unsigned long long seed) const {
    DisjointnessReport rep;
    const int r = table_.rank();
    Subalgebra a = fixed_point_algebra();
    std::vector<std::optional<Eigen::MatrixXcd>> phis(r);
    for (int d = 0; d < r; ++d) {
        phis[d] = algebraic_hilbert_space(d, seed + d);
        if (!phis[d]) rep.missing_hilbert_spaces.push_back(d);
    }
    rep.intertwiner_dim.assign(r, std::vector<int>(r, -1));
    bool off_diag_zero = true;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (!phis[i] || !phis[j]) continue;
            int dim = static_cast<int>(intertwiner_space(*phis[i], *phis[j], a).size());
            rep.intertwiner_dim[i][j] = dim;
            if (i != j && dim != 0) off_diag_zero = false;
        }
    rep.pairwise_disjoint = off_diag_zero && rep.missing_hilbert_spaces.empty();
    rep.minimal = minimality_report().minimal;
    rep.biconditional_holds = rep.pairwise_disjoint == rep.minimal;
    return rep;
}

Eigen::VectorXcd SpectralLab::to_coords(const Eigen::MatrixXcd& f) const {
    Eigen::VectorXcd v(algebra_dim());
    int pos = 0;
    for (auto [offset, size] : sys_.blocks)
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) v[pos++] = f(offset + i, offset + j);
    return v;
}

Eigen::MatrixXcd SpectralLab::from_coords(const Eigen::VectorXcd& coords) const {
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(sys_.n, sys_.n);
    int pos = 0;
    for (auto [offset, size] : sys_.blocks)
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) f(offset + i, offset + j) = coords[pos++];
    return f;
}

}  // namespace chainlab
