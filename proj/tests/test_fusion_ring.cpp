#include <doctest.h>

#include <complex>
#include <vector>

#include "chainlab/character_table.hpp"
#include "chainlab/errors.hpp"
#include "chainlab/finite_group.hpp"
#include "chainlab/fusion_ring.hpp"

using namespace chainlab;

namespace {

// Element-wise inner-product oracle: multiplicity of k in i x j computed as a
// sum over raw group elements, independent of the class-summed implementation.
int oracle_coeff(const CharacterTable& t, int i, int j, int k) {
    Complex s = 0;
    for (int x = 0; x < t.group.order; ++x)
        s += t.value(i, x) * t.value(j, x) * std::conj(t.value(k, x));
    s /= static_cast<double>(t.group.order);
    REQUIRE(std::abs(s.imag()) < 1e-6);
    long long v = std::llround(s.real());
    REQUIRE(std::abs(s.real() - v) < 1e-6);
    return static_cast<int>(v);
}

const std::vector<FiniteGroup>& builtin_groups() {
    static const std::vector<FiniteGroup> groups = {
        symmetric(3), symmetric(4), alternating(4), dihedral(4),   dihedral(5),
        dihedral(6),  quaternion(2), quaternion(3), cyclic(6),     cyclic(12),
        direct_product(cyclic(2), dihedral(4)),
    };
    return groups;
}

}  // namespace

TEST_CASE("S3: sigma x sigma = 1 + sgn + sigma") {
    auto t = character_table(symmetric(3));
    auto r = fusion_coefficients(t);
    // canonical order: trivial, sign, 2-dim
    const int sigma = 2;
    CHECK(r.coeff(sigma, sigma, 0) == 1);
    CHECK(r.coeff(sigma, sigma, 1) == 1);
    CHECK(r.coeff(sigma, sigma, 2) == 1);
    for (int k = 0; k < 3; ++k) CHECK(r.coeff(sigma, sigma, k) == oracle_coeff(t, sigma, sigma, k));
}

TEST_CASE("trivial irrep is the fusion unit") {
    for (const auto& g : builtin_groups()) {
        auto r = fusion_coefficients(character_table(g));
        for (int j = 0; j < r.rank; ++j)
            for (int k = 0; k < r.rank; ++k) CHECK(r.coeff(0, j, k) == (j == k ? 1 : 0));
    }
}

TEST_CASE("trivial appears in D x conj(D) exactly once, nowhere else") {
    for (const auto& g : builtin_groups()) {
        auto r = fusion_coefficients(character_table(g));
        for (int i = 0; i < r.rank; ++i)
            for (int j = 0; j < r.rank; ++j)
                CHECK(r.coeff(i, j, 0) == (j == r.conj[i] ? 1 : 0));
    }
}

TEST_CASE("fusion ring axioms on built-in groups") {
    for (const auto& g : builtin_groups()) {
        auto r = fusion_coefficients(character_table(g));
        // commutativity
        for (int i = 0; i < r.rank; ++i)
            for (int j = 0; j < r.rank; ++j)
                for (int k = 0; k < r.rank; ++k) CHECK(r.coeff(i, j, k) == r.coeff(j, i, k));
        // dimension rule
        for (int i = 0; i < r.rank; ++i)
            for (int j = 0; j < r.rank; ++j) {
                long long s = 0;
                for (int k = 0; k < r.rank; ++k) s += static_cast<long long>(r.coeff(i, j, k)) * r.dims[k];
                CHECK(s == static_cast<long long>(r.dims[i]) * r.dims[j]);
            }
        // Frobenius reciprocity
        for (int i = 0; i < r.rank; ++i)
            for (int j = 0; j < r.rank; ++j)
                for (int k = 0; k < r.rank; ++k) CHECK(r.coeff(i, j, k) == r.coeff(r.conj[i], k, j));
        // conjugation is an involution and a ring automorphism on supports
        for (int i = 0; i < r.rank; ++i) CHECK(r.conj[r.conj[i]] == i);
    }
}

TEST_CASE("associativity of structure constants (rank <= 12 exhaustive)") {
    for (const auto& g : builtin_groups()) {
        auto r = fusion_coefficients(character_table(g));
        if (r.rank > 12) continue;
        for (int i = 0; i < r.rank; ++i)
            for (int j = 0; j < r.rank; ++j)
                for (int k = 0; k < r.rank; ++k)
                    for (int l = 0; l < r.rank; ++l) {
                        long long lhs = 0, rhs = 0;
                        for (int m = 0; m < r.rank; ++m) {
                            lhs += static_cast<long long>(r.coeff(i, j, m)) * r.coeff(m, k, l);
                            rhs += static_cast<long long>(r.coeff(j, k, m)) * r.coeff(i, m, l);
                        }
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("abelian fast path agrees with the oracle") {
    auto t = character_table(cyclic(12));
    auto r = fusion_coefficients(t);
    for (int i : {0, 1, 5, 11})
        for (int j : {0, 2, 7}) {
            for (int k = 0; k < r.rank; ++k) CHECK(r.coeff(i, j, k) == oracle_coeff(t, i, j, k));
        }
}

TEST_CASE("product_support") {
    auto r = fusion_coefficients(character_table(symmetric(3)));
    CHECK(product_support({2}, {2}, r) == std::vector<int>{0, 1, 2});
    CHECK(product_support({0}, {0, 1, 2}, r) == std::vector<int>{0, 1, 2});
    for (int i = 0; i < r.rank; ++i) {
        auto s = product_support({i}, {r.conj[i]}, r);
        CHECK(std::find(s.begin(), s.end(), 0) != s.end());
    }
}

TEST_CASE("dimension checks pass on built-ins") {
    for (const auto& g : builtin_groups()) {
        auto report = dimension_checks(fusion_coefficients(character_table(g)));
        CHECK(report.ok);
        CHECK(report.violations.empty());
    }
}

TEST_CASE("S3 composite dimensions: d(sigma x sigma) = 4 = 1 + 1 + 2") {
    auto r = fusion_coefficients(character_table(symmetric(3)));
    long long total = 0;
    for (int k = 0; k < r.rank; ++k) total += static_cast<long long>(r.coeff(2, 2, k)) * r.dims[k];
    CHECK(total == 4);
}

TEST_CASE("D_8: d(D1 x D1) = 4 over four linear constituents") {
    auto r = fusion_coefficients(character_table(dihedral(4)));
    const int d1 = 4;  // the 2-dim irrep
    long long total = 0;
    int constituents = 0;
    for (int k = 0; k < r.rank; ++k) {
        total += static_cast<long long>(r.coeff(d1, d1, k)) * r.dims[k];
        if (r.coeff(d1, d1, k) > 0) {
            CHECK(r.dims[k] == 1);
            constituents += r.coeff(d1, d1, k);
        }
    }
    CHECK(total == 4);
    CHECK(constituents == 4);
}
