#include "cyclo/io.hpp"

#include <string>

namespace cyclo {

using nlohmann::json;

json integers_to_json(const std::vector<Integer>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

std::vector<Integer> integers_from_json(const json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(parse_integer(x.get<std::string>()));
  return out;
}

json to_json(const DivisorReport& r) {
  json positions = json::array();
  for (const auto& rp : r.ratio_positions) positions.push_back({{"index", rp.index}, {"prime", rp.prime}});
  json out = {
      {"n", r.n},
      {"divisors", integers_to_json(r.divisors)},
      {"ratios", integers_to_json(r.ratios)},
      {"ratio_positions", positions},
      {"coker_orders", integers_to_json(r.coker_orders)},
      {"det_sign", r.det_sign},
      {"det_magnitude", r.det_magnitude.get_str()},
      {"gcd_product", r.gcd_product.get_str()},
  };
  if (r.stats) {
    out["stats"] = {
        {"mult_of_one", r.stats->mult_of_one},   {"least_above_one", r.stats->least_above_one},
        {"mult_least", r.stats->mult_least},     {"largest", r.stats->largest},
        {"mult_largest", r.stats->mult_largest},
    };
  } else {
    out["stats"] = nullptr;
  }
  return out;
}

DivisorReport divisor_report_from_json(const json& j) {
  DivisorReport r;
  r.n = j.at("n").get<std::uint64_t>();
  r.divisors = integers_from_json(j.at("divisors"));
  r.ratios = integers_from_json(j.at("ratios"));
  for (const auto& rp : j.at("ratio_positions")) {
    r.ratio_positions.push_back({rp.at("index").get<std::uint64_t>(), rp.at("prime").get<std::uint64_t>()});
  }
  r.coker_orders = integers_from_json(j.at("coker_orders"));
  r.det_sign = j.at("det_sign").get<int>();
  r.det_magnitude = parse_integer(j.at("det_magnitude").get<std::string>());
  r.gcd_product = parse_integer(j.at("gcd_product").get<std::string>());
  if (const auto& s = j.at("stats"); !s.is_null()) {
    r.stats = DivisorStats{s.at("mult_of_one").get<std::uint64_t>(), s.at("least_above_one").get<std::uint64_t>(),
                           s.at("mult_least").get<std::uint64_t>(), s.at("largest").get<std::uint64_t>(),
                           s.at("mult_largest").get<std::uint64_t>()};
  }
  return r;
}

json to_json(const SmithVector& v) {
  json entries = json::array();
  for (const auto& e : v.entries) {
    json comps = json::array();
    for (std::size_t k = 0; k < e.divisors().size(); ++k) {
      comps.push_back({{"d", e.divisors()[k]}, {"coeffs", integers_to_json(e.components()[k].coeffs())}});
    }
    entries.push_back(comps);
  }
  return {{"n", v.n}, {"divisors", integers_to_json(v.divisors)}, {"entries", entries}};
}

SmithVector smith_vector_from_json(const json& j) {
  SmithVector v;
  v.n = j.at("n").get<std::uint64_t>();
  v.divisors = integers_from_json(j.at("divisors"));
  const std::vector<std::uint64_t> divs = divisors_of(v.n);
  for (const auto& entry : j.at("entries")) {
    if (entry.size() != divs.size()) throw ParseError("smith vector: wrong number of components in an entry");
    std::vector<IntPolynomial> comps;
    for (std::size_t k = 0; k < divs.size(); ++k) {
      if (entry[k].at("d").get<std::uint64_t>() != divs[k]) throw ParseError("smith vector: components out of order");
      comps.emplace_back(integers_from_json(entry[k].at("coeffs")));
    }
    v.entries.emplace_back(v.n, std::move(comps));
  }
  return v;
}

std::vector<IntPolynomial> read_polynomials(std::istream& is) {
  std::vector<IntPolynomial> out;
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_polynomial(line));
  }
  return out;
}

}  // namespace cyclo
