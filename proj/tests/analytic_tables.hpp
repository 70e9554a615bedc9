#ifndef CHAINLAB_TESTS_ANALYTIC_TABLES_HPP
#define CHAINLAB_TESTS_ANALYTIC_TABLES_HPP

// Closed-form character tables for the cyclic, dihedral and quaternion
// families, written directly from the standard formulas. These are test
// oracles, independent of the class-matrix solver.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "chainlab/finite_group.hpp"

namespace chainlab::testing {

using Complex = std::complex<double>;

// One character = its value on every *element* (not class); callers compress.
using ElementCharacter = std::vector<Complex>;

inline std::vector<ElementCharacter> analytic_cyclic(int n) {
    std::vector<ElementCharacter> chars;
    for (int j = 0; j < n; ++j) {
        ElementCharacter chi(n);
        for (int k = 0; k < n; ++k) {
            double arg = 2.0 * std::numbers::pi * j * k / n;
            chi[k] = Complex(std::cos(arg), std::sin(arg));
        }
        chars.push_back(chi);
    }
    return chars;
}

// Element layout of chainlab::dihedral(m): a^i at index i, a^i b at m+i.
inline std::vector<ElementCharacter> analytic_dihedral(int m) {
    std::vector<ElementCharacter> chars;
    auto push_linear = [&](double sa, double sb) {
        ElementCharacter chi(2 * m);
        for (int i = 0; i < m; ++i) {
            chi[i] = std::pow(sa, i);
            chi[m + i] = std::pow(sa, i) * sb;
        }
        chars.push_back(chi);
    };
    push_linear(1, 1);
    push_linear(1, -1);
    if (m % 2 == 0) {
        push_linear(-1, 1);
        push_linear(-1, -1);
    }
    int two_dim = m % 2 == 0 ? (m - 2) / 2 : (m - 1) / 2;
    for (int k = 1; k <= two_dim; ++k) {
        ElementCharacter chi(2 * m);
        for (int i = 0; i < m; ++i) {
            chi[i] = 2.0 * std::cos(2.0 * std::numbers::pi * k * i / m);
            chi[m + i] = 0.0;
        }
        chars.push_back(chi);
    }
    return chars;
}

// Element layout of chainlab::quaternion(m): a^i at index i (i < 2m),
// a^i b at 2m+i.
inline std::vector<ElementCharacter> analytic_quaternion(int m) {
    std::vector<ElementCharacter> chars;
    const int n = 4 * m;
    if (m % 2 == 0) {
        for (double sa : {1.0, -1.0})
            for (double sb : {1.0, -1.0}) {
                ElementCharacter chi(n);
                for (int i = 0; i < 2 * m; ++i) {
                    chi[i] = std::pow(sa, i);
                    chi[2 * m + i] = std::pow(sa, i) * sb;
                }
                chars.push_back(chi);
            }
    } else {
        for (int j = 0; j < 4; ++j) {
            Complex sb = std::pow(Complex(0, 1), j);
            double sa = j % 2 == 0 ? 1.0 : -1.0;
            ElementCharacter chi(n);
            for (int i = 0; i < 2 * m; ++i) {
                chi[i] = std::pow(sa, i);
                chi[2 * m + i] = std::pow(sa, i) * sb;
            }
            chars.push_back(chi);
        }
    }
    for (int k = 1; k <= m - 1; ++k) {
        ElementCharacter chi(n);
        for (int i = 0; i < 2 * m; ++i) {
            chi[i] = 2.0 * std::cos(std::numbers::pi * k * i / m);
            chi[2 * m + i] = 0.0;
        }
        chars.push_back(chi);
    }
    return chars;
}

}  // namespace chainlab::testing

#endif
