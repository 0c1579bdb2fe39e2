#pragma once

/**
 * @file io.hpp
 * @brief JSON forms of values and reports (nlohmann::json).
 *
 * Rationals are "p/q" strings, rational functions {"num": [...], "den": [...]}
 * with ascending coefficients, set partitions sorted lists of sorted lists,
 * permutations one-line image lists, pure tensors lists of [lower, upper].
 */

#include "braidties/algebra.hpp"
#include "braidties/identities.hpp"
#include "braidties/specht.hpp"
#include "braidties/tensor.hpp"

#include <json.hpp>

namespace braidties {

using json = nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);
json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);
json to_json(const SetPartition& A);
SetPartition set_partition_from_json(const json& j);
json to_json(const Permutation& w);
Permutation permutation_from_json(const json& j);

/// [{"partition", "perm", "coeff"}...] in key order.
json to_json(const Element& x);
Element element_from_json(const json& j, int n);

json tensor_key_to_json(TensorKey k, int n);
json to_json(const TensorVector<RatFunc>& v);

json to_json(const IntPartition& p);
json to_json(const SpechtLabel& l);

json to_json(const RelationReport& r);
json to_json(const TensorRelationReport& r);
json to_json(const FaithfulnessReport& r);
json to_json(const QuotientReport& r);
json to_json(const ClassificationReport& r);
json to_json(const IdentityReport& r);

}  // namespace braidties
