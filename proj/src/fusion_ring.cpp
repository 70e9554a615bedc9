#include "chainlab/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "chainlab/errors.hpp"

namespace chainlab {

std::vector<int> FusionRing::support(int i, int j) const {
    std::vector<int> s;
    for (int k = 0; k < rank; ++k)
        if (coeff(i, j, k) > 0) s.push_back(k);
    return s;
}

namespace {

using Key = std::vector<long long>;

Key value_key(const Eigen::VectorXcd& v) {
    Key key;
    key.reserve(2 * v.size());
    for (int k = 0; k < v.size(); ++k) {
        key.push_back(std::llround(v[k].real() * 1e6));
        key.push_back(std::llround(v[k].imag() * 1e6));
    }
    return key;
}

int rounded_nonneg(double value, double tol, const char* what) {
    long long r = std::llround(value);
    if (std::abs(value - static_cast<double>(r)) > tol || r < 0)
        throw NumericalResidual(std::string(what) + " does not round to a nonnegative integer: " +
                                std::to_string(value));
    return static_cast<int>(r);
}

}  // namespace

FusionRing fusion_coefficients(const CharacterTable& t, double integer_tol) {
    const int r = t.rank();
    const FiniteGroup& g = t.group;
    FusionRing ring;
    ring.rank = r;
    ring.n.assign(static_cast<size_t>(r) * r * r, 0);
    ring.conj.assign(r, -1);
    ring.dims.resize(r);
    for (int i = 0; i < r; ++i) ring.dims[i] = t.irreps[i].dim;

    std::map<Key, int> by_values;
    for (int i = 0; i < r; ++i) by_values[value_key(t.irreps[i].values)] = i;
    for (int i = 0; i < r; ++i) {
        auto it = by_values.find(value_key(t.irreps[i].values.conjugate()));
        if (it == by_values.end()) throw NumericalResidual("conjugate irrep not found in table");
        ring.conj[i] = it->second;
    }

    bool all_linear = true;
    for (int d : ring.dims) all_linear &= (d == 1);

    if (all_linear) {
        // Products of linear characters are single characters.
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Eigen::VectorXcd prod = t.irreps[i].values.cwiseProduct(t.irreps[j].values);
                auto it = by_values.find(value_key(prod));
                if (it == by_values.end())
                    throw NumericalResidual("product of linear characters is not in the table");
                ring.n[(static_cast<size_t>(i) * r + j) * r + it->second] = 1;
            }
        return ring;
    }

    std::vector<double> class_size(r);
    for (int k = 0; k < r; ++k) class_size[k] = static_cast<double>(g.classes[k].size());
    const double order = static_cast<double>(g.order);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j <= i; ++j) {
            Eigen::VectorXcd prod = t.irreps[i].values.cwiseProduct(t.irreps[j].values);
            for (int k = 0; k < r; ++k) {
                Complex s = 0;
                for (int c = 0; c < r; ++c) s += class_size[c] * prod[c] * std::conj(t.irreps[k].values[c]);
                s /= order;
                if (std::abs(s.imag()) > integer_tol)
                    throw NumericalResidual("fusion coefficient has a nonreal part");
                int v = rounded_nonneg(s.real(), integer_tol, "fusion coefficient");
                ring.n[(static_cast<size_t>(i) * r + j) * r + k] = v;
                ring.n[(static_cast<size_t>(j) * r + i) * r + k] = v;
            }
        }
    return ring;
}

std::vector<int> product_support(const std::vector<int>& s1, const std::vector<int>& s2,
                                 const FusionRing& r) {
    std::set<int> out;
    for (int i : s1)
        for (int j : s2)
            for (int k : r.support(i, j)) out.insert(k);
    return {out.begin(), out.end()};
}

DimensionReport dimension_checks(const FusionRing& r, int random_trials, unsigned long long seed) {
    DimensionReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };

    if (r.dims.empty() || r.dims[0] != 1) fail("d(trivial) != 1");
    for (int i = 0; i < r.rank; ++i)
        if (r.dims[r.conj[i]] != r.dims[i]) fail("d(conj) != d at irrep " + std::to_string(i));
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < r.rank; ++j) {
            long long s = 0;
            for (int k = 0; k < r.rank; ++k) s += static_cast<long long>(r.coeff(i, j, k)) * r.dims[k];
            if (s != static_cast<long long>(r.dims[i]) * r.dims[j])
                fail("dimension rule fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }

    // d is multiplicative through fusion of composite multiplicity vectors.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> mult(0, 2);
    auto total_dim = [&](const std::vector<int>& m) {
        long long s = 0;
        for (int i = 0; i < r.rank; ++i) s += static_cast<long long>(m[i]) * r.dims[i];
        return s;
    };
    for (int trial = 0; trial < random_trials; ++trial) {
        std::vector<int> lambda(r.rank), mu(r.rank);
        for (int i = 0; i < r.rank; ++i) lambda[i] = mult(rng);
        for (int i = 0; i < r.rank; ++i) mu[i] = mult(rng);
        if (total_dim(lambda) == 0) lambda[trial % r.rank] = 1;
        if (total_dim(mu) == 0) mu[(trial + 1) % r.rank] = 1;
        std::vector<long long> prod(r.rank, 0);
        for (int i = 0; i < r.rank; ++i)
            for (int j = 0; j < r.rank; ++j) {
                if (lambda[i] == 0 || mu[j] == 0) continue;
                for (int k = 0; k < r.rank; ++k)
                    prod[k] += static_cast<long long>(lambda[i]) * mu[j] * r.coeff(i, j, k);
            }
        long long s = 0;
        for (int k = 0; k < r.rank; ++k) s += prod[k] * r.dims[k];
        if (s != total_dim(lambda) * total_dim(mu))
            fail("composite dimension identity fails at trial " + std::to_string(trial));
    }
    return report;
}

}  // namespace chainlab
