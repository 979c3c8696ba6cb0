#include "itab/json_io.hpp"

#include <stdexcept>

namespace itab {

namespace {

std::vector<int> int_vector(const json& j, const char* what) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(what) + " must be an array");
  }
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) {
      throw std::invalid_argument(std::string(what) + " must hold integers");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + '"');
  }
  return j.at(key);
}

}  // namespace

json tableau_to_json(const IncreasingTableau& T) {
  json j;
  j["shape"] = T.shape().parts();
  j["bound"] = T.bound();
  j["rows"] = T.rows();
  return j;
}

IncreasingTableau tableau_from_json(const json& j) {
  const Partition shape(int_vector(field(j, "shape"), "shape"));
  const json& bound_j = field(j, "bound");
  if (!bound_j.is_number_integer()) {
    throw std::invalid_argument("bound must be an integer");
  }
  const json& rows_j = field(j, "rows");
  if (!rows_j.is_array()) throw std::invalid_argument("rows must be an array");
  std::vector<std::vector<int>> rows;
  rows.reserve(rows_j.size());
  for (const auto& row : rows_j) rows.push_back(int_vector(row, "tableau row"));
  return IncreasingTableau(shape, std::move(rows), bound_j.get<int>());
}

json ideal_to_json(const OrderIdeal& J) {
  json j;
  j["a"] = J.box_rows();
  j["b"] = J.box_cols();
  j["profile"] = J.profile();
  return j;
}

OrderIdeal ideal_from_json(const json& j) {
  const json& a = field(j, "a");
  const json& b = field(j, "b");
  if (!a.is_number_integer() || !b.is_number_integer()) {
    throw std::invalid_argument("box dimensions must be integers");
  }
  return OrderIdeal(a.get<int>(), b.get<int>(),
                    int_vector(field(j, "profile"), "profile"));
}

json poly_to_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("polynomial must be an array of coefficient strings");
  }
  std::vector<mpz_class> coeffs;
  coeffs.reserve(j.size());
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      // gmp has no long long constructor; go through the decimal text.
      coeffs.emplace_back(x.dump());
    } else if (x.is_string()) {
      try {
        coeffs.emplace_back(x.get<std::string>());
      } catch (const std::exception&) {
        throw std::invalid_argument("bad coefficient string: " +
                                    x.get<std::string>());
      }
    } else {
      throw std::invalid_argument("polynomial coefficients must be strings or integers");
    }
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace itab
