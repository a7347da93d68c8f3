#pragma once

#include <json.hpp>

#include "cartankit/left_invariant.hpp"

namespace cartankit {

using nlohmann::json;

// serialization; rationals as "p/q" strings, matrices as row arrays
json to_json(const Rational& r);
json to_json(const Vec& v);
json to_json(const Matrix& m);
json to_json(const StructureConstants& sc);
json to_json(const MatrixLieBasis& b);
json to_json(const CartanData& d);
json to_json(const Signature& s);
json to_json(const AlgebraFingerprint& fp);
json to_json(const ValidationReport& r);
json to_json(const Witness& w);

// parsing; throws parse_error naming the offending field path
Rational rational_from_json(const json& j, const std::string& path);
Vec vec_from_json(const json& j, const std::string& path);
Matrix matrix_from_json(const json& j, const std::string& path);
StructureConstants structure_constants_from_json(const json& j, const std::string& path);
MatrixLieBasis matrix_lie_basis_from_json(const json& j, const std::string& path);
CartanData cartan_data_from_json(const json& j, const std::string& path);
MetricLieGroupSpec metric_spec_from_json(const json& j, const std::string& path);
std::vector<Matrix> generator_list_from_json(const json& j, const std::string& path);

}  // namespace cartankit
