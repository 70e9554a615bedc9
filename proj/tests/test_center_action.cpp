#include <doctest.h>

#include <random>

#include "chainlab/center_action.hpp"
#include "chainlab/errors.hpp"
#include "chainlab/random_matrices.hpp"

using namespace chainlab;

namespace {

FusionRing d8_ring() { return fusion_coefficients(character_table(dihedral(4))); }

// D_8 has chain classes {linears} = 0 and {D_1} = 1; the swap homomorphism
// sends [D_1] to the transposition of a two-point Gamma.
ChainHomomorphism d8_swap_hom() {
    return chain_homomorphism(d8_ring(), 2, {{1, Permutation{1, 0}}});
}

Eigen::VectorXcd indicator(int size, int point) {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(size);
    z[point] = 1.0;
    return z;
}

}  // namespace

TEST_CASE("homomorphism construction validates the group law") {
    auto ring = d8_ring();
    CHECK_NOTHROW(chain_homomorphism(ring, 2, {{1, Permutation{1, 0}}}));
    // Z3 chain group on Z3: class 1 of cyclic(3) has order 3; a transposition
    // would give h(c)^3 = swap != id.
    auto c3 = fusion_coefficients(character_table(cyclic(3)));
    CHECK_THROWS_AS(chain_homomorphism(c3, 2, {{1, Permutation{1, 0}}}), Error);
    // identity class must act trivially
    CHECK_THROWS_AS(chain_homomorphism(ring, 2, {{0, Permutation{1, 0}}}), Error);
}

TEST_CASE("single irreducible: one entry with weight d(D)") {
    auto h = d8_swap_hom();
    Eigen::VectorXcd z(2);
    z << Complex(0.3, 0.1), Complex(-1.0, 2.0);
    MultiplicityVector lambda{{0, 0, 0, 0, 1}};  // the 2-dim irrep
    auto result = action_on_center(lambda, h, z);
    REQUIRE(result.entries.size() == 1);
    CHECK(result.entries[0].class_id == 1);
    CHECK(result.entries[0].weight == 2);
    CHECK(result.total_weight == 2);
    CHECK((result.entries[0].transformed - permuted_function(Permutation{1, 0}, z)).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("trivial homomorphism: action is the identity, flagged central") {
    auto ring = d8_ring();
    auto h = trivial_homomorphism(ring, 3);
    Eigen::VectorXcd z(3);
    z << Complex(1, 0), Complex(0, 1), Complex(2, -1);
    MultiplicityVector lambda{{1, 0, 2, 0, 3}};  // d = 1 + 2 + 6 = 9
    auto result = action_on_center(lambda, h, z);
    CHECK(result.central);
    CHECK(result.total_weight == 9);
    for (const auto& e : result.entries)
        CHECK((e.transformed - z).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("1 + D_1 on D_8 with the swap: two entries, weights 1 and 2") {
    auto h = d8_swap_hom();
    Eigen::VectorXcd z = indicator(2, 0);
    MultiplicityVector lambda{{1, 0, 0, 0, 1}};
    auto result = action_on_center(lambda, h, z);
    REQUIRE(result.entries.size() == 2);
    CHECK(result.entries[0].class_id == 0);
    CHECK(result.entries[0].weight == 1);
    CHECK(result.entries[1].class_id == 1);
    CHECK(result.entries[1].weight == 2);
    CHECK_FALSE(result.central);
    // the swapped indicator sits at the other point
    CHECK(std::abs(result.entries[1].transformed[1] - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(result.entries[0].transformed[0] - Complex(1, 0)) < 1e-12);
}

TEST_CASE("a constant function is central for any homomorphism") {
    auto h = d8_swap_hom();
    Eigen::VectorXcd z = Eigen::VectorXcd::Constant(2, Complex(0.7, -0.2));
    MultiplicityVector lambda{{1, 0, 0, 0, 1}};
    CHECK(action_on_center(lambda, h, z).central);
}

TEST_CASE("weights sum to the total dimension on random vectors") {
    auto ring = fusion_coefficients(character_table(quaternion(3)));
    auto h = trivial_homomorphism(ring, 2);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> mult(0, 3);
    Eigen::VectorXcd z(2);
    z << Complex(1, 1), Complex(2, 0);
    for (int trial = 0; trial < 50; ++trial) {
        MultiplicityVector lambda;
        lambda.mult.resize(ring.rank);
        for (int i = 0; i < ring.rank; ++i) lambda.mult[i] = mult(rng);
        if (lambda.total_dimension(ring.dims) == 0) lambda.mult[0] = 1;
        auto result = action_on_center(lambda, h, z);
        CHECK(result.total_weight == lambda.total_dimension(ring.dims));
        long long sum = 0;
        for (const auto& e : result.entries) sum += e.weight;
        CHECK(sum == result.total_weight);
    }
}

TEST_CASE("unknown irreps are rejected") {
    auto h = d8_swap_hom();
    Eigen::VectorXcd z(2);
    z << Complex(1, 0), Complex(0, 0);
    MultiplicityVector lambda{{1, 0, 0, 0, 0, 7}};  // index 5 does not exist
    CHECK_THROWS_AS(action_on_center(lambda, h, z), UnknownIrrep);
}

TEST_CASE("composition consistency") {
    auto ring = d8_ring();
    auto h = d8_swap_hom();
    Eigen::VectorXcd z(2);
    z << Complex(0.2, 0.4), Complex(-1.5, 0.3);

    MultiplicityVector d1{{0, 0, 0, 0, 1}};
    CHECK(composition_consistency(d1, d1, h, ring, z).ok);

    MultiplicityVector trivial{{1}};
    MultiplicityVector arbitrary{{1, 0, 1, 0, 2}};
    CHECK(composition_consistency(arbitrary, trivial, h, ring, z).ok);

    auto s3 = fusion_coefficients(character_table(symmetric(3)));
    auto hs3 = trivial_homomorphism(s3, 2);
    MultiplicityVector sigma{{0, 0, 1}};
    CHECK(composition_consistency(sigma, sigma, hs3, s3, z).ok);

    // Random pairs on a few groups.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> mult(0, 2);
    for (const auto& g : {dihedral(6), quaternion(2), cyclic(6)}) {
        auto r = fusion_coefficients(character_table(g));
        std::map<int, Permutation> assign;
        auto cg = chain_group(r);
        // assign a permutation consistent with the chain group: use the
        // regular action of the chain group on itself
        int nc = cg.num_classes();
        for (int c = 0; c < nc; ++c) {
            Permutation p(nc);
            for (int x = 0; x < nc; ++x) p[x] = cg.product[c][x];
            assign[c] = p;
        }
        auto hr = chain_homomorphism(r, nc, assign);
        Eigen::VectorXcd zz = random_complex_matrix(nc, 1, rng).col(0);
        for (int trial = 0; trial < 25; ++trial) {
            MultiplicityVector a, b;
            a.mult.resize(r.rank);
            b.mult.resize(r.rank);
            for (int i = 0; i < r.rank; ++i) {
                a.mult[i] = mult(rng);
                b.mult[i] = mult(rng);
            }
            if (a.total_dimension(r.dims) == 0) a.mult[0] = 1;
            if (b.total_dimension(r.dims) == 0) b.mult[0] = 1;
            CHECK(composition_consistency(a, b, hr, r, zz).ok);
        }
    }
}

TEST_CASE("symmetry obstruction: trivial homomorphism accepts any unitary") {
    auto ring = d8_ring();
    auto h = trivial_homomorphism(ring, 2);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixOverGamma za{random_unitary(2, rng), random_unitary(2, rng)};
        MatrixOverGamma zb{random_unitary(3, rng), random_unitary(3, rng)};
        CHECK(symmetry_obstruction(h, 0, 1, za, zb));
    }
}

TEST_CASE("symmetry obstruction: identity matrices always pass") {
    auto h = d8_swap_hom();
    MatrixOverGamma za{Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(2, 2)};
    CHECK(symmetry_obstruction(h, 1, 1, za, za));
}

TEST_CASE("symmetry obstruction: swap with diag(f,1), f = (1,-1), fails") {
    auto h = d8_swap_hom();
    // Z_A = diag(f, 1) as two Gamma slices: at point 0 diag(1,1), point 1 diag(-1,1).
    MatrixOverGamma za{Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(2, 2)};
    za[1](0, 0) = Complex(-1, 0);
    MatrixOverGamma zb{Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(2, 2)};
    CHECK_FALSE(symmetry_obstruction(h, 1, 1, za, zb));
}

TEST_CASE("symmetry obstruction rejects non-unitary input") {
    auto h = d8_swap_hom();
    MatrixOverGamma bad{Eigen::MatrixXcd::Identity(2, 2), 2.0 * Eigen::MatrixXcd::Identity(2, 2)};
    MatrixOverGamma good{Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(2, 2)};
    CHECK_THROWS_AS(symmetry_obstruction(h, 1, 1, bad, good), NotUnitary);
}

TEST_CASE("admissible arrow ranks") {
    MultiplicityVector rho{{0, 1}};
    CHECK(admissible_arrow_rank(rho, rho) == 1);

    MultiplicityVector tau{{2, 3, 1}};
    CHECK(admissible_arrow_rank(rho, tau) == 3);  // m(rho, tau)

    // S3: sigma (x) sigma = 1 + sgn + sigma, each once -> rank 3.
    auto s3 = fusion_coefficients(character_table(symmetric(3)));
    MultiplicityVector ss;
    ss.mult.resize(s3.rank);
    for (int k = 0; k < s3.rank; ++k) ss.mult[k] = s3.coeff(2, 2, k);
    CHECK(admissible_arrow_rank(ss, ss) == 3);
}
