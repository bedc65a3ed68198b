#include "jumploci/io_json.hpp"

#include <json.hpp>

namespace jumploci {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field '" + key + "'", where);
  return *it;
}

void check_schema(const json& j, const std::string& expected, const std::string& where) {
  if (j.contains("schema") && j.at("schema") != expected)
    throw ParseError("expected schema '" + expected + "'", where);
}

Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), where);
  }
  throw ParseError("expected a rational (string \"p/q\" or integer)", where);
}

Polynomial polynomial_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected a coefficient list", where);
  std::vector<Rational> c;
  for (size_t k = 0; k < j.size(); ++k)
    c.push_back(rational_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  return Polynomial(std::move(c));
}

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_string() || j.is_number_integer()) return Scalar(rational_from_json(j, where));
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("Gaussian scalar needs [re, im]", where);
    return Scalar(GaussianRational(rational_from_json(j[0], where + "[0]"),
                                   rational_from_json(j[1], where + "[1]")));
  }
  if (j.is_object()) {
    try {
      return Scalar(RationalFunction(polynomial_from_json(require(j, "num", where), where + ".num"),
                                     polynomial_from_json(require(j, "den", where), where + ".den")));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), where);
    }
  }
  throw ParseError("unrecognized scalar encoding", where);
}

ojson scalar_to_json(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::kRational:
      return rational_str(s.as_rational());
    case ScalarKind::kGaussian: {
      ojson a = ojson::array();
      a.push_back(rational_str(s.as_gaussian().re));
      a.push_back(rational_str(s.as_gaussian().im));
      return a;
    }
    case ScalarKind::kRatFunc: {
      ojson o;
      ojson num = ojson::array(), den = ojson::array();
      for (const auto& c : s.as_rat_func().num.coeffs()) num.push_back(rational_str(c));
      for (const auto& c : s.as_rat_func().den.coeffs()) den.push_back(rational_str(c));
      o["num"] = std::move(num);
      o["den"] = std::move(den);
      return o;
    }
  }
  throw InternalError("unhandled scalar kind");
}

SparseMatrix matrix_from_triplet_json(const json& j, int rows, int cols,
                                      const std::string& where) {
  if (!j.is_array()) throw ParseError("expected an entry list", where);
  std::vector<std::tuple<int, int, Scalar>> t;
  for (size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const json& e = j[k];
    if (!e.is_array() || e.size() != 3) throw ParseError("expected [row, col, value]", at);
    if (!e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("row and column must be integers", at);
    t.emplace_back(e[0].get<int>(), e[1].get<int>(), scalar_from_json(e[2], at));
  }
  try {
    return SparseMatrix::from_triplets(rows, cols, std::move(t));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), where);
  }
}

std::pair<int, int> locate_global(const std::vector<int>& dims, int g, const std::string& where) {
  int deg = 0, k = g;
  if (g < 0) throw ParseError("negative basis index", where);
  while (deg < static_cast<int>(dims.size()) && k >= dims[deg]) {
    k -= dims[deg];
    ++deg;
  }
  if (deg >= static_cast<int>(dims.size())) throw ParseError("basis index out of range", where);
  return {deg, k};
}

}  // namespace

Cdga parse_cdga(const std::string& text) {
  json j = parse_text(text);
  check_schema(j, "cdga/1", "schema");
  const json& jd = require(j, "dims", "dims");
  if (!jd.is_array()) throw ParseError("expected an array", "dims");
  std::vector<int> dims;
  for (const auto& d : jd) {
    if (!d.is_number_integer() || d.get<int>() < 0)
      throw ParseError("degree dimensions must be nonnegative integers", "dims");
    dims.push_back(d.get<int>());
  }
  std::vector<std::vector<std::string>> labels;
  if (j.contains("labels")) {
    for (const auto& row : j.at("labels")) {
      labels.emplace_back();
      for (const auto& s : row) labels.back().push_back(s.get<std::string>());
    }
  }
  bool zero_above = j.value("zero_above", true);
  Cdga a = [&] {
    try {
      return Cdga(GradedBasis(dims, labels), zero_above);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), "labels");
    }
  }();

  if (j.contains("diff")) {
    const json& diffs = j.at("diff");
    if (!diffs.is_array()) throw ParseError("expected an array", "diff");
    for (size_t k = 0; k < diffs.size(); ++k) {
      const std::string at = "diff[" + std::to_string(k) + "]";
      const json& row = diffs[k];
      if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer())
        throw ParseError("expected [degree, entries]", at);
      const int deg = row[0].get<int>();
      if (deg < 0 || deg >= static_cast<int>(dims.size()))
        throw ParseError("differential source degree out of range", at);
      const int rows = deg + 1 < static_cast<int>(dims.size()) ? dims[deg + 1] : 0;
      try {
        a.set_diff(deg, matrix_from_triplet_json(row[1], rows, dims[deg], at));
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), at);
      }
    }
  }

  if (j.contains("mult")) {
    const json& mult = j.at("mult");
    if (!mult.is_array()) throw ParseError("expected an array", "mult");
    for (size_t k = 0; k < mult.size(); ++k) {
      const std::string at = "mult[" + std::to_string(k) + "]";
      const json& row = mult[k];
      if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
          !row[1].is_number_integer() || !row[2].is_array())
        throw ParseError("expected [i, j, coefficients]", at);
      const int gi = row[0].get<int>(), gj = row[1].get<int>();
      auto [da, ia] = locate_global(dims, gi, at);
      auto [db, ib] = locate_global(dims, gj, at);
      std::vector<Scalar> coeffs;
      for (size_t c = 0; c < row[2].size(); ++c)
        coeffs.push_back(scalar_from_json(row[2][c], at + "[2][" + std::to_string(c) + "]"));
      try {
        if (gi <= gj)
          a.set_product(da, ia, db, ib, std::move(coeffs));
        else
          a.set_product_asserted(da, ia, db, ib, std::move(coeffs));
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), at);
      }
    }
  }

  if (j.contains("weights")) {
    const json& jw = j.at("weights");
    if (!jw.is_array()) throw ParseError("expected an array of arrays", "weights");
    std::vector<std::vector<int>> w;
    for (const auto& row : jw) {
      w.emplace_back();
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw ParseError("weights must be integers", "weights");
        w.back().push_back(v.get<int>());
      }
    }
    try {
      a.set_weights(std::move(w));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), "weights");
    }
  }
  return a;
}

LieAlgebra parse_lie(const std::string& text) {
  json j = parse_text(text);
  check_schema(j, "lie/1", "schema");
  const json& jd = require(j, "dim", "dim");
  if (!jd.is_number_integer() || jd.get<int>() < 0)
    throw ParseError("expected a nonnegative integer", "dim");
  const int dim = jd.get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& s : j.at("labels")) labels.push_back(s.get<std::string>());
  else
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  LieAlgebra e = [&] {
    try {
      return LieAlgebra(dim, labels);
    } catch (const PreconditionError& err) {
      throw ParseError(err.what(), "labels");
    }
  }();
  if (j.contains("brackets")) {
    const json& br = j.at("brackets");
    if (!br.is_array()) throw ParseError("expected an array", "brackets");
    for (size_t k = 0; k < br.size(); ++k) {
      const std::string at = "brackets[" + std::to_string(k) + "]";
      const json& row = br[k];
      if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
          !row[1].is_number_integer() || !row[2].is_array())
        throw ParseError("expected [a, b, coefficients]", at);
      std::vector<Scalar> coeffs;
      for (size_t c = 0; c < row[2].size(); ++c)
        coeffs.push_back(scalar_from_json(row[2][c], at + "[2][" + std::to_string(c) + "]"));
      try {
        e.set_bracket(row[0].get<int>(), row[1].get<int>(), std::move(coeffs));
      } catch (const PreconditionError& err) {
        throw ParseError(err.what(), at);
      }
    }
  }
  return e;
}

Arrangement parse_arrangement(const std::string& text) {
  json j = parse_text(text);
  check_schema(j, "arrangement/1", "schema");
  const json& ja = require(j, "ambientDim", "ambientDim");
  if (!ja.is_number_integer()) throw ParseError("expected an integer", "ambientDim");
  const json& jn = require(j, "normals", "normals");
  if (!jn.is_array()) throw ParseError("expected an array", "normals");
  std::vector<std::vector<Rational>> normals;
  for (size_t k = 0; k < jn.size(); ++k) {
    const std::string at = "normals[" + std::to_string(k) + "]";
    if (!jn[k].is_array()) throw ParseError("expected a vector", at);
    normals.emplace_back();
    for (size_t c = 0; c < jn[k].size(); ++c)
      normals.back().push_back(
          rational_from_json(jn[k][c], at + "[" + std::to_string(c) + "]"));
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& s : j.at("labels")) labels.push_back(s.get<std::string>());
  try {
    return make_arrangement(ja.get<int>(), std::move(normals), std::move(labels));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), "normals");
  }
}

Presentation parse_presentation(const std::string& text) {
  json j = parse_text(text);
  check_schema(j, "presentation/1", "schema");
  const json& jg = require(j, "generators", "generators");
  int g = 0;
  std::vector<std::string> labels;
  if (jg.is_number_integer()) {
    g = jg.get<int>();
  } else if (jg.is_array()) {
    for (const auto& s : jg) labels.push_back(s.get<std::string>());
    g = static_cast<int>(labels.size());
  } else {
    throw ParseError("expected a count or a list of names", "generators");
  }
  std::vector<std::vector<int>> relators;
  if (j.contains("relators")) {
    const json& jr = j.at("relators");
    if (!jr.is_array()) throw ParseError("expected an array", "relators");
    for (size_t k = 0; k < jr.size(); ++k) {
      const std::string at = "relators[" + std::to_string(k) + "]";
      if (!jr[k].is_array()) throw ParseError("expected a word", at);
      relators.emplace_back();
      for (const auto& l : jr[k]) {
        if (!l.is_number_integer()) throw ParseError("letters must be signed integers", at);
        relators.back().push_back(l.get<int>());
      }
    }
  }
  try {
    return make_presentation(g, std::move(relators), std::move(labels));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), "relators");
  }
}

std::string cdga_json(const Cdga& a) {
  ojson j;
  j["schema"] = "cdga/1";
  j["dims"] = a.basis().dims;
  j["labels"] = a.basis().labels;
  j["zero_above"] = a.zero_above();
  ojson diffs = ojson::array();
  for (int deg = 0; deg < a.top_degree(); ++deg) {
    const SparseMatrix d = a.diff(deg);
    if (d.nnz() == 0) continue;
    ojson entries = ojson::array();
    for (const auto& e : d.entries()) {
      ojson row = ojson::array();
      row.push_back(e.row);
      row.push_back(e.col);
      row.push_back(scalar_to_json(e.value));
      entries.push_back(std::move(row));
    }
    ojson pair = ojson::array();
    pair.push_back(deg);
    pair.push_back(std::move(entries));
    diffs.push_back(std::move(pair));
  }
  j["diff"] = std::move(diffs);
  ojson mult = ojson::array();
  for (const auto& [key, coeffs] : a.stored_products()) {
    ojson row = ojson::array();
    row.push_back(key.first);
    row.push_back(key.second);
    ojson cs = ojson::array();
    for (const auto& c : coeffs) cs.push_back(scalar_to_json(c));
    row.push_back(std::move(cs));
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  if (a.has_weights()) j["weights"] = a.weights();
  return j.dump(2);
}

std::string lie_json(const LieAlgebra& e) {
  ojson j;
  j["schema"] = "lie/1";
  j["dim"] = e.dim;
  j["labels"] = e.labels;
  ojson brackets = ojson::array();
  for (const auto& [key, coeffs] : e.brackets) {
    ojson row = ojson::array();
    row.push_back(key.first);
    row.push_back(key.second);
    ojson cs = ojson::array();
    for (const auto& c : coeffs) cs.push_back(scalar_to_json(c));
    row.push_back(std::move(cs));
    brackets.push_back(std::move(row));
  }
  j["brackets"] = std::move(brackets);
  return j.dump(2);
}

std::string arrangement_json(const Arrangement& arr) {
  ojson j;
  j["schema"] = "arrangement/1";
  j["ambientDim"] = arr.ambient_dim;
  ojson normals = ojson::array();
  for (const auto& nv : arr.normals) {
    ojson row = ojson::array();
    for (const auto& c : nv) row.push_back(rational_str(c));
    normals.push_back(std::move(row));
  }
  j["normals"] = std::move(normals);
  j["labels"] = arr.labels;
  if (!arr.metadata.empty()) j["metadata"] = arr.metadata;
  return j.dump(2);
}

std::string presentation_json(const Presentation& p) {
  ojson j;
  j["schema"] = "presentation/1";
  j["generators"] = p.labels;
  j["relators"] = p.relators;
  return j.dump(2);
}

Scalar parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty scalar", text);
  if (s.back() != 'i') return Scalar(parse_rational(s));
  std::string body = s.substr(0, s.size() - 1);
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' && body[k - 1] != '+' &&
        body[k - 1] != '-') {
      split = k;
      break;
    }
  std::string re_str = split == std::string::npos ? "0" : body.substr(0, split);
  std::string im_str = split == std::string::npos ? body : body.substr(split);
  if (im_str.empty() || im_str == "+") im_str = "1";
  if (im_str == "-") im_str = "-1";
  if (im_str.size() > 1 && im_str.front() == '+') im_str.erase(0, 1);
  return Scalar(GaussianRational(parse_rational(re_str), parse_rational(im_str)));
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out = "fnv1a:";
  for (int shift = 60; shift >= 0; shift -= 4) out += digits[(h >> shift) & 0xf];
  return out;
}

}  // namespace jumploci
