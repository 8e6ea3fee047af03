#pragma once

#include "derange/analysis.hpp"
#include "derange/bijection.hpp"
#include "derange/intpoly.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace derange {

/// {"var":"x","coeffs":["c0","c1",...]} with decimal-string coefficients.
nlohmann::json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

/// One "degree,coefficient" line per stored coefficient.
std::string poly_to_csv(const IntPoly& p);

nlohmann::json signed_permutation_to_json(const SignedPermutation& w);
nlohmann::json permutation_to_json(const Permutation& p);
nlohmann::json permutation_seq_to_json(const PermutationSeq& seq);
nlohmann::json shape_report_to_json(const ShapeReport& r);

}  // namespace derange
