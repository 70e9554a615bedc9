#ifndef CHAINLAB_FINITE_GROUP_HPP
#define CHAINLAB_FINITE_GROUP_HPP

#include <string>
#include <vector>

namespace chainlab {

/// A finite group given by its full multiplication table, with conjugacy data
/// attached. Element 0 is always the identity; numbering is canonical for the
/// built-in families (identity first, then breadth-first by generator words).
/// Instances are immutable after construction and safe to share across threads.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> mul;  // mul[x][y] = x*y
    int identity = 0;
    std::vector<int> inv;
    std::vector<std::string> names;
    std::vector<int> class_of;               // element -> conjugacy class id
    std::vector<std::vector<int>> classes;   // class id -> sorted member list

    int op(int x, int y) const { return mul[x][y]; }
    int num_classes() const { return static_cast<int>(classes.size()); }
    bool is_abelian() const;

    /// Order of a single element.
    int element_order(int x) const;
};

/// A permutation of {0,..,n-1}, stored as the image list.
using Permutation = std::vector<int>;

Permutation parse_cycles(const std::string& text, int min_size = 0);
Permutation compose(const Permutation& p, const Permutation& q);  // p after q

inline constexpr int kDefaultClosureCap = 10000;

/// Closure of a generating set of permutations under composition.
/// Throws ClosureCapExceeded if the generated order exceeds `cap`.
/// When `words_out` is given it receives, per element, a shortest word as a
/// sequence of generator indices (empty word for the identity).
FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                              int cap = kDefaultClosureCap,
                              std::vector<std::vector<int>>* words_out = nullptr);

/// Dihedral group of order 2m, presented as a^i b^j with
/// a^m = b^2 = e and bab = a^{m-1}.
FiniteGroup dihedral(int m);

/// Generalized quaternion group of order 4m, presented as a^i b^j with
/// a^{2m} = b^4 = e, b^2 = a^m and bab^{-1} = a^{2m-1}.
FiniteGroup quaternion(int m);

FiniteGroup cyclic(int n);
FiniteGroup symmetric(int n);    // n <= 6
FiniteGroup alternating(int n);  // n <= 6
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Sorted list of elements commuting with every group element.
std::vector<int> center(const FiniteGroup& g);

/// Verifies the table axioms (identity, inverses, associativity; exhaustive
/// for order <= 64, sampled otherwise) and the conjugacy data. Throws
/// NotAGroup / invalid data errors on failure. Used on user-supplied tables.
void validate_group(const FiniteGroup& g, unsigned long long assoc_samples = 10000);

/// Rebuilds class_of/classes from the table (identity's class is 0, remaining
/// classes ordered by smallest member).
void compute_conjugacy_classes(FiniteGroup& g);

/// Decomposition of a finite abelian group (given as a multiplication table
/// over 0..n-1 with identity `id`) into a direct product of cyclic subgroups.
/// `factors[i]` is the order of the cyclic subgroup generated by
/// `generators[i]`; factors are listed with each dividing its predecessor.
/// Throws NotAGroup if the table is not a commutative group table.
struct AbelianStructure {
    std::vector<int> factors;     // descending divisibility: d1, d2 | d1, ...
    std::vector<int> generators;  // element indices, one per factor
    std::vector<std::vector<int>> exponents;  // element -> exponent tuple
};
AbelianStructure abelian_structure(const std::vector<std::vector<int>>& table, int id);

/// Invariant factors d1 | d2 | ... (ascending divisibility) of an abelian
/// group table; the classification used for chain groups.
std::vector<int> invariant_factors(const std::vector<std::vector<int>>& table, int id);

/// Display name like "Z2 x Z4" or "trivial" from ascending invariant factors.
std::string abelian_group_name(const std::vector<int>& factors);

}  // namespace chainlab

#endif
