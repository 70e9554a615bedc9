#include "chainlab/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "chainlab/errors.hpp"

namespace chainlab {

bool FiniteGroup::is_abelian() const {
    for (int x = 0; x < order; ++x)
        for (int y = x + 1; y < order; ++y)
            if (mul[x][y] != mul[y][x]) return false;
    return true;
}

int FiniteGroup::element_order(int x) const {
    int k = 1;
    int p = x;
    while (p != identity) {
        p = mul[p][x];
        ++k;
    }
    return k;
}

Permutation parse_cycles(const std::string& text, int min_size) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    int max_point = min_size - 1;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
            ++i;
            continue;
        }
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
        size_t close = text.find(')', i);
        if (close == std::string::npos) throw ParseError("unbalanced '(' in cycle notation: " + text);
        std::istringstream body(text.substr(i + 1, close - i - 1));
        std::vector<int> cyc;
        int p;
        while (body >> p) {
            if (p < 1) throw ParseError("cycle points are 1-based positive integers: " + text);
            cyc.push_back(p - 1);
            max_point = std::max(max_point, p - 1);
        }
        std::set<int> dedup(cyc.begin(), cyc.end());
        if (dedup.size() != cyc.size()) throw ParseError("repeated point inside a cycle: " + text);
        if (!cyc.empty()) cycles.push_back(cyc);
        i = close + 1;
    }
    int n = max_point + 1;
    if (n <= 0) n = 1;
    Permutation perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& cyc : cycles) {
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k];
            int to = cyc[(k + 1) % cyc.size()];
            if (perm[from] != from) throw ParseError("cycles are not disjoint: " + text);
            perm[from] = to;
        }
    }
    return perm;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(q.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

namespace {

void check_is_permutation(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v])
            throw ParseError("generator is not a permutation");
        seen[v] = 1;
    }
}

std::string generator_letter(size_t index) {
    std::string s(1, static_cast<char>('a' + index % 26));
    if (index >= 26) s += std::to_string(index / 26);
    return s;
}

}  // namespace

FiniteGroup from_permutations(const std::vector<Permutation>& generators, int cap,
                              std::vector<std::vector<int>>* words_out) {
    size_t domain = 1;
    for (const auto& g : generators) domain = std::max(domain, g.size());
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
        Permutation p = g;
        for (size_t i = p.size(); i < domain; ++i) p.push_back(static_cast<int>(i));
        check_is_permutation(p);
        gens.push_back(p);
    }

    Permutation id(domain);
    std::iota(id.begin(), id.end(), 0);

    std::vector<Permutation> elems{id};
    std::vector<std::string> names{"e"};
    std::vector<std::vector<int>> words{{}};
    std::map<Permutation, int> index{{id, 0}};
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop();
        for (size_t j = 0; j < gens.size(); ++j) {
            Permutation next = compose(elems[x], gens[j]);  // right multiplication
            auto [it, inserted] = index.emplace(next, static_cast<int>(elems.size()));
            if (inserted) {
                if (static_cast<int>(elems.size()) >= cap)
                    throw ClosureCapExceeded("generated order exceeds cap " + std::to_string(cap));
                elems.push_back(next);
                names.push_back(x == 0 ? generator_letter(j) : names[x] + generator_letter(j));
                words.push_back(words[x]);
                words.back().push_back(static_cast<int>(j));
                todo.push(static_cast<int>(elems.size()) - 1);
            }
        }
    }
    if (words_out) *words_out = words;

    FiniteGroup g;
    g.order = static_cast<int>(elems.size());
    g.names = std::move(names);
    g.mul.assign(g.order, std::vector<int>(g.order));
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) g.mul[x][y] = index.at(compose(elems[x], elems[y]));
    g.inv.resize(g.order);
    for (int x = 0; x < g.order; ++x) {
        for (int y = 0; y < g.order; ++y)
            if (g.mul[x][y] == 0) {
                g.inv[x] = y;
                break;
            }
    }
    compute_conjugacy_classes(g);
    return g;
}

namespace {

std::string power_name(const std::string& base, int i) {
    if (i == 0) return "";
    if (i == 1) return base;
    return base + std::to_string(i);
}

FiniteGroup from_normal_form(int a_order, bool b_squares_to_am,
                             const std::string& /*family*/) {
    // Elements a^i b^j, 0 <= i < a_order, j in {0,1}; index = i + a_order*j.
    // b a = a^{-1} b; for quaternion-type groups b^2 = a^{a_order/2}.
    const int m = a_order;
    FiniteGroup g;
    g.order = 2 * m;
    g.mul.assign(g.order, std::vector<int>(g.order));
    auto idx = [m](int i, int j) { return ((i % m) + m) % m + m * j; };
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = j1 == 0 ? i1 + i2 : i1 - i2;
                    int j = (j1 + j2) % 2;
                    if (b_squares_to_am && j1 == 1 && j2 == 1) i += m / 2;
                    g.mul[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
    g.inv.resize(g.order);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (g.mul[x][y] == 0) {
                g.inv[x] = y;
                break;
            }
    g.names.resize(g.order);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string n = power_name("a", i) + power_name("b", j);
            g.names[idx(i, j)] = n.empty() ? "e" : n;
        }
    compute_conjugacy_classes(g);
    return g;
}

}  // namespace

FiniteGroup dihedral(int m) {
    if (m < 2) throw Error(ErrorCode::Domain, "dihedral requires m >= 2");
    return from_normal_form(m, false, "D");
}

FiniteGroup quaternion(int m) {
    if (m < 2) throw Error(ErrorCode::Domain, "quaternion requires m >= 2");
    return from_normal_form(2 * m, true, "Q");
}

FiniteGroup cyclic(int n) {
    if (n < 1) throw Error(ErrorCode::Domain, "cyclic requires n >= 1");
    FiniteGroup g;
    g.order = n;
    g.mul.assign(n, std::vector<int>(n));
    g.inv.resize(n);
    g.names.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
        g.inv[i] = (n - i) % n;
        g.names[i] = i == 0 ? "e" : power_name("g", i);
    }
    compute_conjugacy_classes(g);
    return g;
}

FiniteGroup symmetric(int n) {
    if (n < 1 || n > 6) throw Error(ErrorCode::Domain, "symmetric(n) supports 1 <= n <= 6");
    if (n == 1) return from_permutations({Permutation{0}});
    std::vector<Permutation> gens;
    Permutation swap01(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    gens.push_back(swap01);
    if (n > 2) {
        Permutation cycle(n);
        for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
        gens.push_back(cycle);
    }
    return from_permutations(gens);
}

FiniteGroup alternating(int n) {
    if (n < 1 || n > 6) throw Error(ErrorCode::Domain, "alternating(n) supports 1 <= n <= 6");
    if (n <= 2) {
        Permutation id(static_cast<size_t>(std::max(n, 1)));
        std::iota(id.begin(), id.end(), 0);
        return from_permutations({id});
    }
    std::vector<Permutation> gens;
    for (int k = 2; k < n; ++k) {
        // 3-cycle (0 1 k)
        Permutation p(n);
        std::iota(p.begin(), p.end(), 0);
        p[0] = 1;
        p[1] = k;
        p[k] = 0;
        gens.push_back(p);
    }
    return from_permutations(gens);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    FiniteGroup p;
    p.order = g.order * h.order;
    auto idx = [&](int x, int y) { return x * h.order + y; };
    p.mul.assign(p.order, std::vector<int>(p.order));
    p.inv.resize(p.order);
    p.names.resize(p.order);
    for (int x1 = 0; x1 < g.order; ++x1)
        for (int y1 = 0; y1 < h.order; ++y1) {
            for (int x2 = 0; x2 < g.order; ++x2)
                for (int y2 = 0; y2 < h.order; ++y2)
                    p.mul[idx(x1, y1)][idx(x2, y2)] = idx(g.mul[x1][x2], h.mul[y1][y2]);
            p.inv[idx(x1, y1)] = idx(g.inv[x1], h.inv[y1]);
            p.names[idx(x1, y1)] = "(" + g.names[x1] + "|" + h.names[y1] + ")";
        }
    compute_conjugacy_classes(p);
    return p;
}

void compute_conjugacy_classes(FiniteGroup& g) {
    g.class_of.assign(g.order, -1);
    g.classes.clear();
    for (int x = 0; x < g.order; ++x) {
        if (g.class_of[x] != -1) continue;
        int id = static_cast<int>(g.classes.size());
        std::vector<int> members;
        for (int t = 0; t < g.order; ++t) {
            int y = g.mul[g.mul[t][x]][g.inv[t]];
            if (g.class_of[y] == -1) {
                g.class_of[y] = id;
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
        g.classes.push_back(std::move(members));
    }
}

std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int x = 0; x < g.order; ++x) {
        bool central = true;
        for (int y = 0; y < g.order && central; ++y)
            if (g.mul[x][y] != g.mul[y][x]) central = false;
        if (central) z.push_back(x);
    }
    return z;
}

void validate_group(const FiniteGroup& g, unsigned long long assoc_samples) {
    const int n = g.order;
    if (n <= 0) throw NotAGroup("empty group table");
    if (static_cast<int>(g.mul.size()) != n) throw NotAGroup("mul table has wrong row count");
    for (const auto& row : g.mul) {
        if (static_cast<int>(row.size()) != n) throw NotAGroup("mul table has ragged rows");
        for (int v : row)
            if (v < 0 || v >= n) throw NotAGroup("mul entry out of range");
    }
    if (g.identity != 0) throw NotAGroup("identity must be element 0");
    for (int x = 0; x < n; ++x)
        if (g.mul[0][x] != x || g.mul[x][0] != x) throw NotAGroup("element 0 is not an identity");
    if (static_cast<int>(g.inv.size()) != n) throw NotAGroup("inverse table has wrong size");
    for (int x = 0; x < n; ++x)
        if (g.mul[x][g.inv[x]] != 0 || g.mul[g.inv[x]][x] != 0)
            throw NotAGroup("inverse table is wrong at element " + std::to_string(x));
    // Latin-square rows (left cancellation); quick bijectivity check.
    for (int x = 0; x < n; ++x) {
        std::vector<char> seen(n, 0);
        for (int y = 0; y < n; ++y) {
            if (seen[g.mul[x][y]]) throw NotAGroup("row " + std::to_string(x) + " is not a bijection");
            seen[g.mul[x][y]] = 1;
        }
    }
    auto assoc = [&](int x, int y, int z) {
        return g.mul[g.mul[x][y]][z] == g.mul[x][g.mul[y][z]];
    };
    if (n <= 64) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (!assoc(x, y, z)) throw NotAGroup("associativity fails");
    } else {
        std::mt19937_64 rng(0xC0FFEEULL);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (unsigned long long s = 0; s < assoc_samples; ++s)
            if (!assoc(pick(rng), pick(rng), pick(rng)))
                throw NotAGroup("associativity fails on sampled triple");
    }
    // Conjugacy data must match a fresh computation.
    FiniteGroup fresh = g;
    compute_conjugacy_classes(fresh);
    if (fresh.class_of != g.class_of || fresh.classes != g.classes)
        throw NotAGroup("conjugacy data does not match the table");
}

namespace {

// Quotient of an abelian group table by the cyclic subgroup generated by gen.
// Cosets are labeled 0..q-1 in order of their smallest member; the coset of
// the identity gets label 0.
struct Quotient {
    std::vector<std::vector<int>> table;
    std::vector<int> coset_of;                 // element -> coset label
    std::vector<std::vector<int>> coset_members;
};

Quotient quotient_by_cyclic(const std::vector<std::vector<int>>& table, int id, int gen) {
    const int n = static_cast<int>(table.size());
    std::vector<int> subgroup;
    int p = id;
    do {
        subgroup.push_back(p);
        p = table[p][gen];
    } while (p != id);

    std::vector<int> rep_of(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (rep_of[x] != -1) continue;
        std::vector<int> coset;
        for (int h : subgroup) coset.push_back(table[x][h]);
        int rep = *std::min_element(coset.begin(), coset.end());
        for (int y : coset) rep_of[y] = rep;
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<int> label_of_rep(n, -1);
    for (size_t i = 0; i < reps.size(); ++i) label_of_rep[reps[i]] = static_cast<int>(i);

    Quotient q;
    q.coset_of.resize(n);
    q.coset_members.assign(reps.size(), {});
    for (int x = 0; x < n; ++x) {
        q.coset_of[x] = label_of_rep[rep_of[x]];
        q.coset_members[q.coset_of[x]].push_back(x);
    }
    const int m = static_cast<int>(reps.size());
    q.table.assign(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) q.table[i][j] = q.coset_of[table[reps[i]][reps[j]]];
    return q;
}

int table_element_order(const std::vector<std::vector<int>>& table, int id, int x) {
    int k = 1;
    int p = x;
    while (p != id) {
        p = table[p][x];
        ++k;
    }
    return k;
}

int table_power(const std::vector<std::vector<int>>& table, int id, int x, int e) {
    int r = id;
    for (int i = 0; i < e; ++i) r = table[r][x];
    return r;
}

}  // namespace

AbelianStructure abelian_structure(const std::vector<std::vector<int>>& table, int id) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NotAGroup("empty table");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n) throw NotAGroup("ragged table");
    for (int x = 0; x < n; ++x)
        if (table[id][x] != x || table[x][id] != x) throw NotAGroup("not an identity element");
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (table[x][y] != table[y][x]) throw NotAGroup("table is not commutative");
    for (int x = 0; x < n; ++x) {
        std::vector<char> seen(n, 0);
        for (int y = 0; y < n; ++y) {
            int v = table[x][y];
            if (v < 0 || v >= n || seen[v]) throw NotAGroup("table row is not a bijection");
            seen[v] = 1;
        }
    }
    for (int x = 0; x < n && n <= 64; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    throw NotAGroup("table is not associative");

    AbelianStructure out;
    if (n == 1) {
        out.exponents.assign(1, {});
        return out;
    }

    // Split off a maximal-order cyclic factor, recurse on the quotient, then
    // lift quotient generators to elements of matching order.
    int best = -1, best_order = 0;
    for (int x = 0; x < n; ++x) {
        int o = table_element_order(table, id, x);
        if (o > best_order) {
            best_order = o;
            best = x;
        }
    }
    Quotient q = quotient_by_cyclic(table, id, best);
    AbelianStructure rest = abelian_structure(q.table, 0);

    out.factors.push_back(best_order);
    out.generators.push_back(best);
    for (size_t i = 0; i < rest.generators.size(); ++i) {
        int want = rest.factors[i];
        int lifted = -1;
        for (int x : q.coset_members[rest.generators[i]]) {
            if (table_power(table, id, x, want) == id) {
                lifted = x;
                break;
            }
        }
        if (lifted < 0) throw NotAGroup("abelian decomposition failed to lift a generator");
        out.factors.push_back(want);
        out.generators.push_back(lifted);
    }

    // element -> exponent tuple, by enumerating the direct product.
    const size_t r = out.factors.size();
    out.exponents.assign(n, {});
    std::vector<int> tuple(r, 0);
    std::vector<char> hit(n, 0);
    while (true) {
        int elem = id;
        for (size_t i = 0; i < r; ++i) elem = table[elem][table_power(table, id, out.generators[i], tuple[i])];
        if (hit[elem]) throw NotAGroup("abelian decomposition is not direct");
        hit[elem] = 1;
        out.exponents[elem] = tuple;
        size_t pos = 0;
        while (pos < r && ++tuple[pos] == out.factors[pos]) tuple[pos++] = 0;
        if (pos == r) break;
    }
    return out;
}

std::vector<int> invariant_factors(const std::vector<std::vector<int>>& table, int id) {
    AbelianStructure s = abelian_structure(table, id);
    std::vector<int> asc(s.factors.rbegin(), s.factors.rend());
    return asc;
}

std::string abelian_group_name(const std::vector<int>& factors) {
    std::vector<int> nontrivial;
    for (int d : factors)
        if (d > 1) nontrivial.push_back(d);
    if (nontrivial.empty()) return "trivial";
    std::string s;
    for (size_t i = 0; i < nontrivial.size(); ++i) {
        if (i) s += " x ";
        s += "Z" + std::to_string(nontrivial[i]);
    }
    return s;
}

}  // namespace chainlab
