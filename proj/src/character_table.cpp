#include "chainlab/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "chainlab/errors.hpp"

namespace chainlab {

namespace {

// Class multiplication matrices M_i with (M_i)(j,k) = c_ijk, where
// C_i C_j = sum_k c_ijk C_k as class sums in the group algebra.
std::vector<Eigen::MatrixXd> class_matrices(const FiniteGroup& g) {
    const int r = g.num_classes();
    std::vector<Eigen::MatrixXd> m(r, Eigen::MatrixXd::Zero(r, r));
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            int i = g.class_of[x], j = g.class_of[y], k = g.class_of[g.mul[x][y]];
            m[i](j, k) += 1.0;
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) m[i](j, k) /= static_cast<double>(g.classes[k].size());
    return m;
}

std::vector<long long> sort_key(const Irrep& irr) {
    std::vector<long long> key{irr.dim};
    for (int k = 0; k < irr.values.size(); ++k) key.push_back(std::llround(irr.values[k].real() * 1e6));
    for (int k = 0; k < irr.values.size(); ++k) key.push_back(std::llround(irr.values[k].imag() * 1e6));
    return key;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g, const DixonOptions& opts) {
    const int r = g.num_classes();
    const auto mats = class_matrices(g);

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> coeff(0.1, 1.0);

    Eigen::MatrixXcd vectors;  // columns are candidate central-character vectors
    bool separated = false;
    for (int attempt = 0; attempt < opts.max_redraws && !separated; ++attempt) {
        Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
        for (int i = 0; i < r; ++i) combo += coeff(rng) * mats[i];
        Eigen::EigenSolver<Eigen::MatrixXd> solver(combo);
        if (solver.info() != Eigen::Success) continue;

        double scale = 1.0 + solver.eigenvalues().cwiseAbs().maxCoeff();
        bool distinct = true;
        for (int i = 0; i < r && distinct; ++i)
            for (int j = i + 1; j < r && distinct; ++j)
                if (std::abs(solver.eigenvalues()[i] - solver.eigenvalues()[j]) < 1e-8 * scale)
                    distinct = false;
        if (!distinct) continue;

        vectors = solver.eigenvectors();
        // Each column must be a common eigenvector of every class matrix.
        separated = true;
        for (int c = 0; c < r && separated; ++c) {
            Eigen::VectorXcd w = vectors.col(c);
            if (std::abs(w[0]) < 1e-12) {
                separated = false;
                break;
            }
            w /= w[0];  // identity class carries central character 1
            for (int i = 0; i < r && separated; ++i) {
                Eigen::VectorXcd res = mats[i] * w - w[i] * w;
                if (res.norm() > 1e-7 * (1.0 + w.norm() * (1.0 + std::abs(w[i])))) separated = false;
            }
            vectors.col(c) = w;
        }
    }
    if (!separated)
        throw DegenerateSpectrum("class-matrix spectrum not separated after " +
                                 std::to_string(opts.max_redraws) + " redraws");

    CharacterTable table;
    table.group = g;
    const double order = static_cast<double>(g.order);
    for (int c = 0; c < r; ++c) {
        Eigen::VectorXcd w = vectors.col(c);
        double inv_d2 = 0;  // sum_k |w_k|^2 / |C_k|  =  |G| / d^2
        for (int k = 0; k < r; ++k) inv_d2 += std::norm(w[k]) / static_cast<double>(g.classes[k].size());
        double d_float = std::sqrt(order / inv_d2);
        int d = static_cast<int>(std::llround(d_float));
        if (d < 1 || std::abs(d_float - d) > opts.residual_tol)
            throw NumericalResidual("irrep dimension " + std::to_string(d_float) +
                                    " is not integral within tolerance");
        Irrep irr;
        irr.dim = d;
        irr.values.resize(r);
        for (int k = 0; k < r; ++k)
            irr.values[k] = static_cast<double>(d) * w[k] / static_cast<double>(g.classes[k].size());
        table.irreps.push_back(std::move(irr));
    }

    // Row orthogonality, and sum of squared dimensions.
    long long dim2 = 0;
    for (const auto& irr : table.irreps) dim2 += static_cast<long long>(irr.dim) * irr.dim;
    if (dim2 != g.order) throw NumericalResidual("sum of squared dimensions != group order");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Complex s = 0;
            for (int k = 0; k < r; ++k)
                s += static_cast<double>(g.classes[k].size()) * table.irreps[i].values[k] *
                     std::conj(table.irreps[j].values[k]);
            Complex expected = i == j ? Complex(order, 0) : Complex(0, 0);
            if (std::abs(s - expected) > opts.residual_tol * order)
                throw NumericalResidual("row orthogonality residual too large");
        }

    // Canonical order: trivial character first, then ascending dimension with
    // rounded value vectors as tiebreak.
    auto is_trivial = [&](const Irrep& irr) {
        if (irr.dim != 1) return false;
        for (int k = 0; k < r; ++k)
            if (std::abs(irr.values[k] - Complex(1, 0)) > 1e-6) return false;
        return true;
    };
    std::stable_sort(table.irreps.begin(), table.irreps.end(), [&](const Irrep& a, const Irrep& b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        return sort_key(a) < sort_key(b);
    });
    if (!is_trivial(table.irreps[0])) throw NumericalResidual("trivial character not found");
    return table;
}

Complex central_character(const CharacterTable& t, int irrep, int element) {
    if (irrep < 0 || irrep >= t.rank()) throw UnknownIrrep("irrep index out of range");
    const FiniteGroup& g = t.group;
    for (int y = 0; y < g.order; ++y)
        if (g.mul[element][y] != g.mul[y][element])
            throw NotCentral("element " + g.names[element] + " is not central");
    Complex v = t.irreps[irrep].values[g.class_of[element]] / static_cast<double>(t.irreps[irrep].dim);
    if (std::abs(std::abs(v) - 1.0) > 1e-9)
        throw NumericalResidual("central character is not unit modulus");
    return v;
}

DualGroup dual_of_center(const FiniteGroup& g) {
    DualGroup dual;
    dual.center_elements = center(g);
    const int z = static_cast<int>(dual.center_elements.size());
    std::vector<int> pos(g.order, -1);
    for (int i = 0; i < z; ++i) pos[dual.center_elements[i]] = i;

    std::vector<std::vector<int>> sub(z, std::vector<int>(z));
    for (int i = 0; i < z; ++i)
        for (int j = 0; j < z; ++j) sub[i][j] = pos[g.mul[dual.center_elements[i]][dual.center_elements[j]]];
    AbelianStructure s = abelian_structure(sub, 0);
    const size_t nf = s.factors.size();

    // Characters indexed by exponent tuples in the same mixed-radix order the
    // decomposition uses for elements.
    std::vector<std::vector<int>> tuples;
    std::vector<int> tuple(nf, 0);
    while (true) {
        tuples.push_back(tuple);
        size_t p = 0;
        while (p < nf && ++tuple[p] == s.factors[p]) tuple[p++] = 0;
        if (p == nf) break;
    }
    if (static_cast<int>(tuples.size()) != z) throw TheoremViolation("dual enumeration size mismatch");

    FiniteGroup dg;
    dg.order = z;
    dg.mul.assign(z, std::vector<int>(z));
    dg.inv.resize(z);
    dg.names.resize(z);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < z; ++i) index[tuples[i]] = i;
    for (int i = 0; i < z; ++i) {
        for (int j = 0; j < z; ++j) {
            std::vector<int> sum(nf);
            for (size_t f = 0; f < nf; ++f) sum[f] = (tuples[i][f] + tuples[j][f]) % s.factors[f];
            dg.mul[i][j] = index.at(sum);
        }
        std::vector<int> neg(nf);
        for (size_t f = 0; f < nf; ++f) neg[f] = (s.factors[f] - tuples[i][f]) % s.factors[f];
        dg.inv[i] = index.at(neg);
        if (i == 0) {
            dg.names[i] = "1";
        } else {
            std::string n = "chi";
            for (size_t f = 0; f < nf; ++f) n += (f ? "," : "(") + std::to_string(tuples[i][f]);
            dg.names[i] = n + ")";
        }
    }
    compute_conjugacy_classes(dg);

    dual.pairing.resize(z, z);
    for (int i = 0; i < z; ++i)
        for (int j = 0; j < z; ++j) {
            double arg = 0;
            for (size_t f = 0; f < nf; ++f)
                arg += 2.0 * std::numbers::pi * tuples[i][f] * s.exponents[j][f] /
                       static_cast<double>(s.factors[f]);
            dual.pairing(i, j) = Complex(std::cos(arg), std::sin(arg));
        }
    dual.group = std::move(dg);
    return dual;
}

}  // namespace chainlab
