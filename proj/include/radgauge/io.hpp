#pragma once

#include <json.hpp>
#include <string>

#include "radgauge/case.hpp"
#include "radgauge/matrix.hpp"
#include "radgauge/scalar_function.hpp"

namespace rg {

// {"dim": n, "re": [[...]], "im": [[...]]}, row-major
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const CVector& v);
CVector vector_from_json(const nlohmann::json& j);

nlohmann::json function_to_json(const ScalarFunction& f);
ScalarFunction function_from_json(const nlohmann::json& j);

nlohmann::json case_to_json(const InequalityCase& c);
InequalityCase case_from_json(const nlohmann::json& j);

// FNV-1a of the canonical case serialization, 16 hex digits
std::string case_digest(const InequalityCase& c);

ComplexMatrix load_matrix(const std::string& path);

}  // namespace rg
