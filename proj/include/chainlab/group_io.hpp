#ifndef CHAINLAB_GROUP_IO_HPP
#define CHAINLAB_GROUP_IO_HPP

#include <json.hpp>

#include <string>

#include "chainlab/finite_group.hpp"
#include "chainlab/spectral_lab.hpp"

namespace chainlab {

/// Group-spec mini-language used by the CLI:
///   D:<order>   dihedral group of that order (order = 2m)
///   Q:<order>   generalized quaternion group of that order (order = 4m)
///   S:<n>       symmetric group on n letters
///   A:<n>       alternating group on n letters
///   C:<n>       cyclic group of order n
///   perm:(1 2),(1 2 3)   closure of permutation generators (cycle notation)
///   file:<path>          JSON group file {"order":n,"mul":[[...]],"names":[...]}
/// The colon may be omitted for the single-letter families (D8, S3, ...).
FiniteGroup parse_group_spec(const std::string& spec);

FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

/// System-spec for the spectral lab:
///   regular:<group-spec>   left regular system of the group
///   swap-blocks:<b>        Z2 swapping two b x b blocks
///   file:<path>            JSON {"group":<spec|object>,"matrices":[...]} or
///                          {"generators":["(1 2)",...],"matrices":[...]}
MatrixDynamicalSystem parse_system_spec(const std::string& spec);

MatrixDynamicalSystem system_from_json(const nlohmann::json& j);

/// Builds the closure of permutation generators and extends the per-generator
/// unitaries multiplicatively along shortest words. Inconsistent matrices are
/// caught by the representation validation.
MatrixDynamicalSystem system_from_generator_matrices(const std::vector<Permutation>& generators,
                                                     const std::vector<Eigen::MatrixXcd>& matrices,
                                                     int cap = kDefaultClosureCap);

Eigen::MatrixXcd complex_matrix_from_json(const nlohmann::json& j);
nlohmann::json complex_matrix_to_json(const Eigen::MatrixXcd& m);

}  // namespace chainlab

#endif
