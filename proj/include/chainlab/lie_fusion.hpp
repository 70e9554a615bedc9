#ifndef CHAINLAB_LIE_FUSION_HPP
#define CHAINLAB_LIE_FUSION_HPP

#include <string>
#include <vector>

namespace chainlab {

enum class LieFamily { SU2, SO3, O3, U2 };

std::string family_name(LieFamily f);
LieFamily family_from_name(const std::string& name);

/// Irreducible label for the four compact families. Spins are stored doubled
/// (twice_l = 2l), so all arithmetic in this module is exact.
struct LieLabel {
    LieFamily family = LieFamily::SU2;
    int twice_l = 0;
    int epsilon = 0;  // O3 only, in {0,1}
    int m = 0;        // U2 only, with m + 2l even

    bool operator==(const LieLabel&) const = default;
};

LieLabel su2_label(int twice_l);
LieLabel so3_label(int l);
LieLabel o3_label(int epsilon, int twice_l);
LieLabel u2_label(int m, int twice_l);

std::string label_name(const LieLabel& l);

/// Clebsch-Gordan range l x l' = {|l-l'|, ..., l+l'} with the family's extra
/// quantum number added (epsilon mod 2 for O3, m additively for U2).
/// Throws FamilyMismatch when the labels live in different families.
std::vector<LieLabel> lie_fusion(const LieLabel& a, const LieLabel& b);

/// Chain classes on the truncated window {l <= l_max} (plus |m| <= 2 l_max
/// for U2), computed by the same union-find fixpoint as the finite case, and
/// validated against the closed-form class invariant of the family.
struct TruncatedChainReport {
    LieFamily family = LieFamily::SU2;
    int l_max = 0;
    std::vector<LieLabel> labels;            // window, canonical order
    std::vector<int> partition;              // label index -> class id
    std::vector<std::vector<int>> classes;   // class id -> label indices
    std::vector<long long> class_keys;       // class id -> invariant value
    std::string invariant;                   // description of the key
    std::string group_name;                  // "Z2", "trivial", "Z"
    bool stable = false;

    int num_classes() const { return static_cast<int>(classes.size()); }
    int class_of(const LieLabel& l) const;
};

TruncatedChainReport lie_chain_classes(LieFamily family, int l_max);

}  // namespace chainlab

#endif
