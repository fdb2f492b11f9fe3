#pragma once
// JSON (de)serialization of homogeneous period polynomials:
//   { "weight": k, "monomials": [ { "x": a, "y": b, "coeff": "num/den" } ] }
// with x + y = k - 2 per monomial, reduced rational coefficient strings, and
// unlisted monomials equal to zero.

#include <fstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "qzeta/algebra.hpp"
#include "qzeta/periodpoly.hpp"

namespace qzeta {

inline nlohmann::json poly_to_json(const HomPoly& p) {
  nlohmann::json monomials = nlohmann::json::array();
  const int deg = p.weight - 2;
  for (int i = 0; i <= deg; ++i) {
    const Rational& c = p.c[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    monomials.push_back({{"coeff", rational_to_string(c)}, {"x", deg - i}, {"y", i}});
  }
  return nlohmann::json{{"monomials", std::move(monomials)}, {"weight", p.weight}};
}

inline HomPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("period polynomial: expected a JSON object");
  if (!j.contains("weight") || !j.at("weight").is_number_integer())
    throw DomainError("period polynomial: missing integer \"weight\"");
  const long long k = j.at("weight").get<long long>();
  if (k < 4 || k % 2 != 0 || k > 1000)
    throw DomainError("period polynomial: weight must be even, >= 4, and modest");
  HomPoly p(static_cast<int>(k));
  const int deg = static_cast<int>(k) - 2;
  if (!j.contains("monomials") || !j.at("monomials").is_array())
    throw DomainError("period polynomial: missing \"monomials\" array");
  std::vector<bool> seen(static_cast<std::size_t>(deg) + 1, false);
  for (const nlohmann::json& m : j.at("monomials")) {
    if (!m.is_object() || !m.contains("x") || !m.contains("y") || !m.contains("coeff") ||
        !m.at("x").is_number_integer() || !m.at("y").is_number_integer() ||
        !m.at("coeff").is_string())
      throw DomainError("period polynomial: each monomial needs integer x, y and string coeff");
    const long long x = m.at("x").get<long long>();
    const long long y = m.at("y").get<long long>();
    if (x < 0 || y < 0 || x + y != deg)
      throw DomainError("period polynomial: monomial exponents must be >= 0 with x + y = weight - 2");
    if (seen[static_cast<std::size_t>(y)])
      throw DomainError("period polynomial: duplicate monomial");
    seen[static_cast<std::size_t>(y)] = true;
    p.c[static_cast<std::size_t>(y)] = rational_from_string(m.at("coeff").get<std::string>());
  }
  return p;
}

inline void write_poly_file(const std::string& path, const HomPoly& p) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open for writing: " + path);
  out << poly_to_json(p).dump(2) << "\n";
  if (!out) throw DomainError("write failed: " + path);
}

inline HomPoly read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open for reading: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("invalid JSON in " + path + ": " + e.what());
  }
  return poly_from_json(j);
}

}  // namespace qzeta
