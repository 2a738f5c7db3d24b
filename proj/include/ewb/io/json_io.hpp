#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ewb/exact/polynomial.hpp"
#include "ewb/lie/lie_element.hpp"
#include "ewb/lie/quotient.hpp"
#include "ewb/modular/divisor.hpp"
#include "ewb/numeric/bigfloat.hpp"

namespace ewb {

using json = nlohmann::json;

/// Malformed input; each issue is "<json pointer>: <message>".
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

/// {"N": int, "support": [{"t1": int, "t2": int, "coeff": "p/q"}]}, support in
/// point order.
json to_json(const Divisor& d);
/// Collects every violation before throwing SchemaError. Coefficients are
/// normalized to lowest terms; zero coefficients are dropped.
Divisor divisor_from_json(const json& j);

/// {"N": int, "rows": [[a,b],[c,d]]}
json to_json(const ModMatrix& g);
ModMatrix matrix_from_json(const json& j);

/// [{"representative": matrix, "value": "p/q"}] in canonical coset order.
json to_json(const IsomFunction& f);

/// {"D": int, "terms": [{"hall": "[e1,e2]", "coeff": "p/q"}]}, Hall order.
json to_json(const LieElement& x);
LieElement lie_from_json(const json& j);

json to_json(const PolbarCoordinates& p);
json to_json(const RationalPolynomial& p);
json to_json(const CyclotomicCombo& c);
json to_json(const LiCombo& c);

/// Significant digits used for every decimal string in reports.
int report_digits(long precision_bits);
json to_json(const BigComplex& z, int digits);

/// Reads and parses a JSON file; unreadable files and syntax errors raise
/// SchemaError.
json load_json(const std::filesystem::path& path);
Divisor load_divisor(const std::filesystem::path& path);
/// Pretty-printed with sorted keys and a trailing newline.
void save_report(const json& report, const std::filesystem::path& path);
std::string dump_report(const json& report);

}  // namespace ewb
