#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclo/divisors.hpp"
#include "cyclo/smithvec.hpp"

namespace cyclo {

// JSON documents. Every unbounded integer is written as a decimal string.

nlohmann::json integers_to_json(const std::vector<Integer>& xs);
std::vector<Integer> integers_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DivisorReport& r);
DivisorReport divisor_report_from_json(const nlohmann::json& j);

/// {"n": int, "divisors": [str], "entries": [[{"d": int, "coeffs": [str]}, ...], ...]}
nlohmann::json to_json(const SmithVector& v);
SmithVector smith_vector_from_json(const nlohmann::json& j);

/// One monic polynomial per nonblank line, in the polynomial text format.
/// Lines starting with '#' are comments.
std::vector<IntPolynomial> read_polynomials(std::istream& is);

}  // namespace cyclo
