#include "farkas/cli/codec.hpp"

namespace farkas::cli {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ..."; keep its wording.
    throw InputError(std::string("syntax error: ") + e.what());
  }
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string join(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (const Json* f = optional_field(obj, key, path)) return *f;
  throw InputError(join(path, key) + ": missing field");
}

const Json* optional_field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw InputError((path.empty() ? "document" : path) + ": expected an object");
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

Rational read_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError(path + ": expected a rational such as \"3\" or \"-2/5\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::size_t read_index(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw InputError(path + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

bool read_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw InputError(path + ": expected true or false");
  return j.get<bool>();
}

std::string read_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path + ": expected a string");
  return j.get<std::string>();
}

RatVector read_vector(const Json& j, const std::string& path, std::optional<std::size_t> dim) {
  if (!j.is_array()) throw InputError(path + ": expected an array of rationals");
  if (dim && j.size() != *dim) {
    throw InputError(path + ": expected " + std::to_string(*dim) + " entries, got " + std::to_string(j.size()));
  }
  RatVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = read_rational(j[i], join(path, i));
  return v;
}

RatMatrix read_matrix(const Json& j, const std::string& path, std::optional<std::size_t> rows,
                      std::optional<std::size_t> cols) {
  if (!j.is_array()) throw InputError(path + ": expected an array of rows");
  if (rows && j.size() != *rows) {
    throw InputError(path + ": expected " + std::to_string(*rows) + " rows, got " + std::to_string(j.size()));
  }
  std::size_t width = cols.value_or(j.empty() ? 0 : (j[0].is_array() ? j[0].size() : 0));
  RatMatrix m(j.size(), width);
  for (std::size_t r = 0; r < j.size(); ++r) m.set_row(r, read_vector(j[r], join(path, r), width));
  return m;
}

ComplexRational read_complex(const Json& j, const std::string& path) {
  return {read_rational(field(j, "re", path), join(path, "re")), read_rational(field(j, "im", path), join(path, "im"))};
}

Projection read_projection(const Json& j, const std::string& path, std::size_t m) {
  const std::string text = read_string(j, path);
  if (text.size() != m) throw InputError(path + ": expected a mask of length " + std::to_string(m));
  try {
    return Projection::parse(text);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json write(const Rational& r) { return r.str(); }

Json write(const RatVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(write(e));
  return out;
}

Json write(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(write(m.row(r)));
  return out;
}

Json write(const ComplexRational& c) { return Json{{"re", write(c.re)}, {"im", write(c.im)}}; }

Json write(const Projection& p) { return p.str(); }

}  // namespace farkas::cli
