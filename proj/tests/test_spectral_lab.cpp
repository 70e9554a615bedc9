#include <doctest.h>

#include <random>

#include "chainlab/errors.hpp"
#include "chainlab/random_matrices.hpp"
#include "chainlab/spectral_lab.hpp"

using namespace chainlab;

namespace {

// G = Z2 acting on M_2 by conjugation with diag(1,-1).
MatrixDynamicalSystem z2_sign_system() {
    MatrixDynamicalSystem sys;
    sys.group = cyclic(2);
    sys.n = 2;
    sys.blocks = {{0, 2}};
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(2, 2);
    u(1, 1) = -1.0;
    sys.rep = {Eigen::MatrixXcd::Identity(2, 2), u};
    return sys;
}

MatrixDynamicalSystem trivial_action_system(int n) {
    MatrixDynamicalSystem sys;
    sys.group = cyclic(2);
    sys.n = n;
    sys.blocks = {{0, n}};
    sys.rep = {Eigen::MatrixXcd::Identity(n, n), Eigen::MatrixXcd::Identity(n, n)};
    return sys;
}

}  // namespace

TEST_CASE("system validation") {
    CHECK_NOTHROW(validate_system(regular_system(symmetric(3))));
    CHECK_NOTHROW(validate_system(swap_block_system(2)));
    CHECK_NOTHROW(validate_system(z2_sign_system()));

    auto bad = z2_sign_system();
    bad.rep[1](0, 0) = 2.0;
    CHECK_THROWS_AS(validate_system(bad), NumericalResidual);

    auto nonrep = z2_sign_system();
    nonrep.rep[0] << 1, 0, 0, -1;  // identity slot must hold the identity matrix
    CHECK_THROWS_AS(validate_system(nonrep), NumericalResidual);
}

TEST_CASE("trivial projection is the group average") {
    SpectralLab lab(regular_system(symmetric(3)));
    std::mt19937_64 rng(1);
    Eigen::MatrixXcd f = lab.random_element(rng);
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(6, 6);
    for (int g = 0; g < 6; ++g) avg += lab.act(g, f);
    avg /= 6.0;
    CHECK((lab.project(0, f) - avg).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Z2 sign projection fixes the matrix unit E12") {
    SpectralLab lab(z2_sign_system());
    Eigen::MatrixXcd e12 = Eigen::MatrixXcd::Zero(2, 2);
    e12(0, 1) = 1.0;
    // alpha_g(E12) = -E12 for the nontrivial g; with conj(chi_sign) weights the
    // average returns E12 itself.
    CHECK((lab.project(1, e12) - e12).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(lab.project(0, e12).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("invariant elements have no nontrivial spectral parts") {
    SpectralLab lab(regular_system(cyclic(5)));
    std::mt19937_64 rng(2);
    Eigen::MatrixXcd f = lab.project(0, lab.random_element(rng));
    for (int d = 1; d < lab.dual_size(); ++d)
        CHECK(lab.project(d, f).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("projections are mutually orthogonal idempotents summing to id") {
    for (const auto& sys : {regular_system(symmetric(3)), swap_block_system(2)}) {
        SpectralLab lab(sys);
        std::mt19937_64 rng(3);
        Eigen::MatrixXcd f = lab.random_element(rng);
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(sys.n, sys.n);
        for (int d = 0; d < lab.dual_size(); ++d) {
            Eigen::MatrixXcd fd = lab.project(d, f);
            sum += fd;
            for (int e = 0; e < lab.dual_size(); ++e) {
                Eigen::MatrixXcd nested = lab.project(e, fd);
                if (e == d)
                    CHECK((nested - fd).cwiseAbs().maxCoeff() < 1e-9);
                else
                    CHECK(nested.cwiseAbs().maxCoeff() < 1e-9);
            }
        }
        CHECK((sum - f).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("module property over the fixed-point algebra") {
    SpectralLab lab(regular_system(symmetric(3)));
    auto a = lab.fixed_point_algebra();
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> coeff(-1, 1);
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(6, 6), y = Eigen::MatrixXcd::Zero(6, 6);
        for (const auto& b : a.basis) {
            x += Complex(coeff(rng), coeff(rng)) * b;
            y += Complex(coeff(rng), coeff(rng)) * b;
        }
        Eigen::MatrixXcd f = lab.random_element(rng);
        for (int d = 0; d < lab.dual_size(); ++d)
            CHECK((lab.project(d, x * f * y) - x * lab.project(d, f) * y).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("A-scalar product is symmetric under projections") {
    SpectralLab lab(regular_system(dihedral(4)));
    std::mt19937_64 rng(5);
    Eigen::MatrixXcd f = lab.random_element(rng), g = lab.random_element(rng);
    for (int d = 0; d < lab.dual_size(); ++d) {
        Eigen::MatrixXcd lhs = lab.a_scalar_product(lab.project(d, f), g);
        Eigen::MatrixXcd rhs = lab.a_scalar_product(f, lab.project(d, g));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("Parseval: identity input gives zero residual and a single term") {
    SpectralLab lab(regular_system(symmetric(3)));
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(6, 6);
    auto res = lab.parseval_check(id);
    CHECK(res.parseval_residual < 1e-12);
    CHECK(res.reconstruction_residual < 1e-12);
    for (int d = 1; d < lab.dual_size(); ++d) CHECK(lab.project(d, id).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Parseval on random elements of the S3 regular system") {
    SpectralLab lab(regular_system(symmetric(3)));
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        auto res = lab.parseval_check(lab.random_element(rng));
        CHECK(res.parseval_residual < 1e-9);
        CHECK(res.reconstruction_residual < 1e-9);
    }
}

TEST_CASE("isotypic elements keep a single Parseval term") {
    SpectralLab lab(regular_system(cyclic(5)));
    std::mt19937_64 rng(7);
    Eigen::MatrixXcd f = lab.project(2, lab.random_element(rng));
    int nonzero = 0;
    for (int d = 0; d < lab.dual_size(); ++d)
        if (operator_norm(lab.a_scalar_product(lab.project(d, f), lab.project(d, f))) > 1e-12) ++nonzero;
    CHECK(nonzero == 1);
}

TEST_CASE("fixed points, commutant, center: diag action is minimal") {
    SpectralLab lab(z2_sign_system());
    auto a = lab.fixed_point_algebra();
    CHECK(a.dim() == 2);  // diagonal matrices
    auto rep = lab.minimality_report();
    CHECK(rep.dim_commutant == 2);
    CHECK(rep.dim_center == 2);
    CHECK(rep.minimal);
}

TEST_CASE("trivial action is minimal: A = F, commutant = scalars = center") {
    SpectralLab lab(trivial_action_system(3));
    auto rep = lab.minimality_report();
    CHECK(rep.dim_fixed == 9);
    CHECK(rep.dim_commutant == 1);
    CHECK(rep.dim_center == 1);
    CHECK(rep.minimal);
}

TEST_CASE("swap-block system is not minimal") {
    SpectralLab lab(swap_block_system(2));
    auto rep = lab.minimality_report();
    CHECK(rep.dim_fixed == 4);      // pairs (X, X), X in M_2
    CHECK(rep.dim_center == 1);     // A is a full M_2
    CHECK(rep.dim_commutant == 2);  // aI (+) bI
    CHECK_FALSE(rep.minimal);
}

TEST_CASE("subalgebras are *-closed and unital") {
    for (const auto& sys : {regular_system(symmetric(3)), swap_block_system(2), z2_sign_system()}) {
        SpectralLab lab(sys);
        auto a = lab.fixed_point_algebra();
        Eigen::MatrixXcd cols(lab.algebra_dim(), a.dim());
        for (int k = 0; k < a.dim(); ++k) cols.col(k) = lab.to_coords(a.basis[k]);
        auto in_span = [&](const Eigen::MatrixXcd& x) {
            Eigen::VectorXcd v = lab.to_coords(x);
            return (v - cols * (cols.adjoint() * v)).norm() < 1e-9 * std::max(1.0, v.norm());
        };
        CHECK(in_span(Eigen::MatrixXcd::Identity(sys.n, sys.n)));
        for (const auto& x : a.basis) {
            CHECK(in_span(x.adjoint()));
            for (const auto& y : a.basis) CHECK(in_span(x * y));
        }
    }
}

TEST_CASE("algebraic Hilbert spaces of Z_n regular systems exist for all characters") {
    for (int n : {3, 5}) {
        SpectralLab lab(regular_system(cyclic(n)));
        for (int j = 0; j < n; ++j) {
            auto phi = lab.algebraic_hilbert_space(j);
            REQUIRE(phi.has_value());
            for (int g = 0; g < n; ++g)
                CHECK((lab.act(g, *phi) - lab.table().value(j, g) * *phi).cwiseAbs().maxCoeff() < 1e-9);
        }
        // The diagonal character matrix generates the conjugate class's space.
        Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(n, n);
        for (int g = 0; g < n; ++g) diag(g, g) = lab.table().value(1, g);
        for (int g = 0; g < n; ++g)
            CHECK((lab.act(g, diag) - std::conj(lab.table().value(1, g)) * diag).cwiseAbs().maxCoeff() <
                  1e-9);
    }
}

TEST_CASE("identity generates the trivial algebraic Hilbert space") {
    SpectralLab lab(regular_system(cyclic(4)));
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
    for (int g = 0; g < 4; ++g)
        CHECK((lab.act(g, id) - lab.table().value(0, g) * id).cwiseAbs().maxCoeff() < 1e-12);
    auto phi = lab.algebraic_hilbert_space(0);
    REQUIRE(phi.has_value());
}

TEST_CASE("Z2 sign character on the diag action is generated by sigma_x") {
    SpectralLab lab(z2_sign_system());
    auto phi = lab.algebraic_hilbert_space(1);
    REQUIRE(phi.has_value());
    CHECK(std::abs((*phi)(0, 0)) < 1e-9);
    CHECK(std::abs((*phi)(1, 1)) < 1e-9);
    CHECK(std::abs(std::abs((*phi)(0, 1)) - 1.0) < 1e-9);
}

TEST_CASE("nonabelian groups are refused for algebraic Hilbert spaces") {
    SpectralLab lab(regular_system(symmetric(3)));
    CHECK_THROWS_AS(lab.algebraic_hilbert_space(0), NonAbelianGroup);
}

TEST_CASE("absent Hilbert space is reported, not thrown") {
    SpectralLab lab(trivial_action_system(2));
    CHECK_FALSE(lab.algebraic_hilbert_space(1).has_value());
}

TEST_CASE("(iota, iota) equals the center of A") {
    for (const auto& sys : {regular_system(cyclic(6)), swap_block_system(2)}) {
        SpectralLab lab(sys);
        auto a = lab.fixed_point_algebra();
        Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(sys.n, sys.n);
        auto space = lab.intertwiner_space(id, id, a);
        CHECK(static_cast<int>(space.size()) == lab.algebra_center(a).dim());
    }
}

TEST_CASE("(rho, rho) contains the identity") {
    SpectralLab lab(regular_system(cyclic(5)));
    auto a = lab.fixed_point_algebra();
    auto phi = lab.algebraic_hilbert_space(2);
    REQUIRE(phi.has_value());
    auto space = lab.intertwiner_space(*phi, *phi, a);
    CHECK(!space.empty());
    // identity is in the span
    Eigen::MatrixXcd cols(lab.algebra_dim(), static_cast<int>(space.size()));
    for (size_t k = 0; k < space.size(); ++k) cols.col(static_cast<int>(k)) = lab.to_coords(space[k]);
    Eigen::VectorXcd v = lab.to_coords(Eigen::MatrixXcd::Identity(5, 5));
    CHECK((v - cols * (cols.adjoint() * v)).norm() < 1e-9 * v.norm());
}

TEST_CASE("endomorphism invariance check rejects maps leaving A") {
    SpectralLab lab(z2_sign_system());
    auto a = lab.fixed_point_algebra();
    Eigen::MatrixXcd hadamard(2, 2);
    hadamard << 1, 1, 1, -1;
    hadamard /= std::sqrt(2.0);
    CHECK_THROWS_AS(lab.check_endomorphism_invariance(hadamard, a), NotInvariant);
}

TEST_CASE("Z_n regular systems are minimal with disjoint endomorphisms") {
    SpectralLab lab(regular_system(cyclic(5)));
    auto rep = lab.disjointness_report();
    CHECK(rep.missing_hilbert_spaces.empty());
    CHECK(rep.pairwise_disjoint);
    CHECK(rep.minimal);
    CHECK(rep.biconditional_holds);
    // A is abelian here, so (rho, rho) = rho(Z(A)) = A has dimension 5.
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(rep.intertwiner_dim[i][j] == (i == j ? 5 : 0));
}

TEST_CASE("swap-block system: (rho_sign, iota) is nonzero, not minimal") {
    SpectralLab lab(swap_block_system(2));
    auto rep = lab.disjointness_report();
    CHECK(rep.missing_hilbert_spaces.empty());
    CHECK_FALSE(rep.pairwise_disjoint);
    CHECK_FALSE(rep.minimal);
    CHECK(rep.biconditional_holds);
    CHECK(rep.intertwiner_dim[1][0] > 0);
}

TEST_CASE("norm bounds hold on sampled elements") {
    for (const auto& sys : {regular_system(symmetric(3)), regular_system(cyclic(5))}) {
        SpectralLab lab(sys);
        auto rep = lab.norm_bound_check(25);
        CHECK(rep.ok);
        CHECK(rep.max_operator_excess <= 1e-9);
        CHECK(rep.max_a_norm_excess <= 1e-9);
    }
}
