#include "cob2/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cob2 {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
  } catch (const std::exception& e) {
    throw AlgebraIoError(where + ": " + e.what());
  }
  throw AlgebraIoError(where + ": expected a rational as \"p/q\" string or integer");
}

}  // namespace

AlgebraSpec parse_algebra_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw AlgebraIoError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim"))
    throw AlgebraIoError("algebra spec must be an object with a \"dim\" field");

  AlgebraSpec spec;
  Eigen::Index n = 0;
  try {
    n = j.at("dim").get<Eigen::Index>();
  } catch (const json::exception&) {
    throw AlgebraIoError("\"dim\" must be a positive integer");
  }
  if (n <= 0) throw AlgebraIoError("\"dim\" must be a positive integer");

  FrobeniusAlgebra<Rational>& a = spec.algebra;
  a.dim = n;
  a.basis.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) a.basis[i] = "e" + std::to_string(i);
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    if (!b.is_array() || static_cast<Eigen::Index>(b.size()) != n)
      throw AlgebraIoError("\"basis\" must list dim names");
    for (Eigen::Index i = 0; i < n; ++i) a.basis[i] = b[i].get<std::string>();
  }

  auto vector_field = [&](const char* key) {
    const json& v = j.at(key);
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != n)
      throw AlgebraIoError(std::string("\"") + key + "\" must list dim rationals");
    DenseVector<Rational> out(n);
    for (Eigen::Index i = 0; i < n; ++i)
      out(i) = rational_field(v[i], std::string(key) + "[" + std::to_string(i) + "]");
    return out;
  };

  if (!j.contains("unit") || !j.contains("counit") || !j.contains("mul"))
    throw AlgebraIoError("algebra spec needs \"unit\", \"counit\" and \"mul\"");
  a.unit = vector_field("unit");
  DenseVector<Rational> counit = vector_field("counit");
  a.counit = counit.transpose();

  const json& mul = j.at("mul");
  if (!mul.is_array() || static_cast<Eigen::Index>(mul.size()) != n)
    throw AlgebraIoError("\"mul\" must be a dim x dim x dim array");
  a.product = DenseMatrix<Rational>::Zero(n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = mul[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw AlgebraIoError("\"mul\" must be a dim x dim x dim array");
    for (Eigen::Index jj = 0; jj < n; ++jj) {
      const json& cell = row[jj];
      if (!cell.is_array() || static_cast<Eigen::Index>(cell.size()) != n)
        throw AlgebraIoError("\"mul\" must be a dim x dim x dim array");
      for (Eigen::Index k = 0; k < n; ++k) {
        std::string where = "mul[" + std::to_string(i) + "][" + std::to_string(jj) + "][" +
                            std::to_string(k) + "]";
        a.product(k, i * n + jj) = rational_field(cell[k], where);
      }
    }
  }

  spec.involution = DenseMatrix<Rational>::Identity(n, n);
  if (j.contains("involution")) {
    const json& m = j.at("involution");
    if (!m.is_array() || static_cast<Eigen::Index>(m.size()) != n)
      throw AlgebraIoError("\"involution\" must be a dim x dim matrix");
    for (Eigen::Index r = 0; r < n; ++r) {
      const json& row = m[r];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
        throw AlgebraIoError("\"involution\" must be a dim x dim matrix");
      for (Eigen::Index c = 0; c < n; ++c)
        spec.involution(r, c) = rational_field(
            row[c], "involution[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }

  if (j.contains("theta")) spec.theta = vector_field("theta");
  return spec;
}

AlgebraSpec load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AlgebraIoError("cannot open algebra file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str());
}

}  // namespace cob2
