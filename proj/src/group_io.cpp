#include "chainlab/group_io.hpp"

#include <cctype>
#include <fstream>

#include "chainlab/errors.hpp"

namespace chainlab {

using nlohmann::json;

namespace {

int parse_positive_int(const std::string& text, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size() || v <= 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected a positive integer for " + what + ", got '" + text + "'");
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

std::vector<Permutation> parse_generator_list(const std::string& text) {
    std::vector<Permutation> gens;
    size_t start = 0;
    while (start < text.size()) {
        size_t comma = std::string::npos;
        int depth = 0;
        for (size_t i = start; i < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            if (text[i] == ',' && depth == 0) {
                comma = i;
                break;
            }
        }
        std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (piece.find_first_not_of(" \t") != std::string::npos) gens.push_back(parse_cycles(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (gens.empty()) throw ParseError("no permutation generators in '" + text + "'");
    return gens;
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec.empty()) throw ParseError("empty group spec");
    if (spec.rfind("file:", 0) == 0) return group_from_json(load_json_file(spec.substr(5)));
    if (spec.rfind("perm:", 0) == 0) return from_permutations(parse_generator_list(spec.substr(5)));

    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0])));
    std::string rest = spec.substr(1);
    if (!rest.empty() && rest[0] == ':') rest = rest.substr(1);
    int value = parse_positive_int(rest, std::string(1, family));
    switch (family) {
        case 'D':
            if (value % 2 != 0 || value < 4)
                throw ParseError("dihedral spec D:<order> needs an even order >= 4");
            return dihedral(value / 2);
        case 'Q':
            if (value % 4 != 0 || value < 8)
                throw ParseError("quaternion spec Q:<order> needs an order divisible by 4, >= 8");
            return quaternion(value / 4);
        case 'S': return symmetric(value);
        case 'A': return alternating(value);
        case 'C': return cyclic(value);
        default: throw ParseError("unknown group family '" + std::string(1, family) + "' in spec " + spec);
    }
}

FiniteGroup group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
        throw ParseError("group JSON needs {\"order\": n, \"mul\": [[...]]}");
    FiniteGroup g;
    g.order = j.at("order").get<int>();
    if (g.order <= 0) throw ParseError("group order must be positive");
    g.mul = j.at("mul").get<std::vector<std::vector<int>>>();
    if (j.contains("names")) {
        g.names = j.at("names").get<std::vector<std::string>>();
        if (static_cast<int>(g.names.size()) != g.order)
            throw ParseError("names list must have one entry per element");
    } else {
        for (int i = 0; i < g.order; ++i) g.names.push_back("g" + std::to_string(i));
    }
    if (static_cast<int>(g.mul.size()) != g.order) throw NotAGroup("mul table has wrong row count");
    for (const auto& row : g.mul) {
        if (static_cast<int>(row.size()) != g.order) throw NotAGroup("mul table has ragged rows");
        for (int v : row)
            if (v < 0 || v >= g.order) throw NotAGroup("mul entry out of range");
    }
    g.inv.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
        for (int y = 0; y < g.order; ++y)
            if (g.mul[x][y] == 0 && g.mul[y][x] == 0) {
                g.inv[x] = y;
                break;
            }
        if (g.inv[x] < 0) throw NotAGroup("element " + std::to_string(x) + " has no inverse");
    }
    compute_conjugacy_classes(g);
    validate_group(g);
    return g;
}

json group_to_json(const FiniteGroup& g) {
    json j;
    j["order"] = g.order;
    j["mul"] = g.mul;
    j["names"] = g.names;
    json classes = json::array();
    for (const auto& c : g.classes) classes.push_back(c);
    j["classes"] = classes;
    j["center"] = center(g);
    return j;
}

Eigen::MatrixXcd complex_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a nonempty array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j.at(r).size()) != cols) throw ParseError("ragged matrix JSON");
        for (int c = 0; c < cols; ++c) {
            const json& cell = j.at(r).at(c);
            if (cell.is_number()) {
                m(r, c) = Complex(cell.get<double>(), 0.0);
            } else if (cell.is_array() && cell.size() == 2) {
                m(r, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
            } else {
                throw ParseError("matrix entries are numbers or [re, im] pairs");
            }
        }
    }
    return m;
}

json complex_matrix_to_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

MatrixDynamicalSystem system_from_generator_matrices(const std::vector<Permutation>& generators,
                                                     const std::vector<Eigen::MatrixXcd>& matrices,
                                                     int cap) {
    if (generators.size() != matrices.size())
        throw ParseError("need exactly one matrix per permutation generator");
    std::vector<std::vector<int>> words;
    MatrixDynamicalSystem sys;
    sys.group = from_permutations(generators, cap, &words);
    if (matrices.empty()) throw ParseError("no generators given");
    const int n = static_cast<int>(matrices[0].rows());
    for (const auto& m : matrices)
        if (m.rows() != n || m.cols() != n) throw ParseError("generator matrices must share one size");
    sys.n = n;
    sys.blocks = {{0, n}};
    sys.rep.reserve(sys.group.order);
    for (int x = 0; x < sys.group.order; ++x) {
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
        for (int j : words[x]) u = u * matrices[j];
        sys.rep.push_back(std::move(u));
    }
    validate_system(sys);
    return sys;
}

MatrixDynamicalSystem system_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("system JSON must be an object");
    std::vector<Eigen::MatrixXcd> matrices;
    if (!j.contains("matrices")) throw ParseError("system JSON needs a \"matrices\" list");
    for (const auto& mj : j.at("matrices")) matrices.push_back(complex_matrix_from_json(mj));

    if (j.contains("generators")) {
        std::vector<Permutation> gens;
        for (const auto& gj : j.at("generators")) gens.push_back(parse_cycles(gj.get<std::string>()));
        return system_from_generator_matrices(gens, matrices);
    }
    if (!j.contains("group")) throw ParseError("system JSON needs \"group\" or \"generators\"");
    MatrixDynamicalSystem sys;
    sys.group = j.at("group").is_string() ? parse_group_spec(j.at("group").get<std::string>())
                                          : group_from_json(j.at("group"));
    if (static_cast<int>(matrices.size()) != sys.group.order)
        throw ParseError("need one matrix per group element");
    sys.rep = std::move(matrices);
    sys.n = static_cast<int>(sys.rep[0].rows());
    if (j.contains("blocks")) {
        for (const auto& bj : j.at("blocks"))
            sys.blocks.push_back({bj.at(0).get<int>(), bj.at(1).get<int>()});
    } else {
        sys.blocks = {{0, sys.n}};
    }
    validate_system(sys);
    return sys;
}

MatrixDynamicalSystem parse_system_spec(const std::string& spec) {
    if (spec.rfind("regular:", 0) == 0) return regular_system(parse_group_spec(spec.substr(8)));
    if (spec.rfind("swap-blocks:", 0) == 0)
        return swap_block_system(parse_positive_int(spec.substr(12), "block size"));
    if (spec.rfind("file:", 0) == 0) return system_from_json(load_json_file(spec.substr(5)));
    throw ParseError("unknown system spec '" + spec +
                     "' (expected regular:<group>, swap-blocks:<b> or file:<path>)");
}

}  // namespace chainlab
