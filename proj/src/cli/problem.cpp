#include "farkas/cli/problem.hpp"

#include <array>
#include <utility>

namespace farkas::cli {

namespace {

constexpr std::array<std::pair<Kind, const char*>, 10> kKinds{{
    {Kind::kHomogeneous, "homogeneous"},
    {Kind::kAlternative, "alternative"},
    {Kind::kInhomogeneous, "inhomogeneous"},
    {Kind::kMatrix, "matrix"},
    {Kind::kReconstruct, "reconstruct"},
    {Kind::kFactorize, "factorize"},
    {Kind::kSublinear, "sublinear"},
    {Kind::kInterval, "interval"},
    {Kind::kComplex, "complex"},
    {Kind::kLagrange, "lagrange"},
}};

const Json& array_field(const Json& doc, const std::string& key) {
  const Json& j = field(doc, key, "");
  if (!j.is_array()) throw InputError(key + ": expected an array");
  return j;
}

std::vector<RatMatrix> read_matrices(const Json& doc, const std::string& key, std::size_t m, std::size_t n) {
  std::vector<RatMatrix> out;
  const Json& list = array_field(doc, key);
  for (std::size_t k = 0; k < list.size(); ++k) out.push_back(read_matrix(list[k], join(key, k), m, n));
  return out;
}

std::vector<RatVector> read_vectors(const Json& doc, const std::string& key, std::size_t count, std::size_t m) {
  const Json& list = array_field(doc, key);
  if (list.size() != count) {
    throw InputError(key + ": expected " + std::to_string(count) + " vectors, one per operator, got " +
                      std::to_string(list.size()));
  }
  std::vector<RatVector> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(read_vector(list[k], join(key, k), m));
  return out;
}

void require_nonnegative(const RatVector& v, const std::string& path) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].sign() < 0) throw InputError(join(path, i) + ": must be >= 0");
  }
}

SublinearOperator read_sublinear(const Json& j, const std::string& path, std::size_t m, std::size_t n) {
  if (!j.is_array() || j.size() != m) throw InputError(path + ": expected " + std::to_string(m) + " generator lists");
  SublinearOperator p;
  for (std::size_t i = 0; i < m; ++i) {
    RatMatrix gens = read_matrix(j[i], join(path, i), {}, n);
    if (gens.rows() == 0) throw InputError(join(path, i) + ": needs at least one generator");
    p.strata.push_back({std::move(gens)});
  }
  return p;
}

IntervalOperator read_interval(const Json& j, const std::string& path, std::size_t m, std::size_t n) {
  IntervalOperator t{read_matrix(field(j, "lower", path), join(path, "lower"), m, n),
                     read_matrix(field(j, "upper", path), join(path, "upper"), m, n)};
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (t.lower(r, c) > t.upper(r, c)) {
        throw InputError(join(join(join(path, "lower"), r), c) + ": exceeds the upper bound");
      }
    }
  }
  return t;
}

ComplexOperator read_complex_operator(const Json& j, const std::string& path, std::size_t m, std::size_t n) {
  if (!j.is_array() || j.size() != m) throw InputError(path + ": expected " + std::to_string(m) + " rows");
  ComplexOperator t{RatMatrix(m, n), RatMatrix(m, n)};
  for (std::size_t r = 0; r < m; ++r) {
    const std::string row_path = join(path, r);
    if (!j[r].is_array() || j[r].size() != n) throw InputError(row_path + ": expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const ComplexRational z = read_complex(j[r][c], join(row_path, c));
      t.re(r, c) = z.re;
      t.im(r, c) = z.im;
    }
  }
  return t;
}

Json write_complex_operator(const ComplexOperator& t) {
  Json out = Json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < t.cols(); ++c) row.push_back(write(ComplexRational{t.re(r, c), t.im(r, c)}));
    out.push_back(std::move(row));
  }
  return out;
}

Json write_sublinear(const SublinearOperator& p) {
  Json out = Json::array();
  for (const auto& s : p.strata) out.push_back(write(s.generators));
  return out;
}

Json write_interval(const IntervalOperator& t) { return Json{{"lower", write(t.lower)}, {"upper", write(t.upper)}}; }

template <typename T, typename F>
Json write_list(const std::vector<T>& items, F f) {
  Json out = Json::array();
  for (const auto& item : items) out.push_back(f(item));
  return out;
}

Payload read_payload(Kind kind, const Json& doc, std::size_t m, std::size_t n) {
  switch (kind) {
    case Kind::kHomogeneous:
    case Kind::kAlternative:
    case Kind::kInhomogeneous: {
      OperatorSystem sys;
      sys.a_list = read_matrices(doc, "A", m, n);
      sys.b = read_matrix(field(doc, "B", ""), "B", m, n);
      if (kind == Kind::kInhomogeneous) {
        sys.u_list = read_vectors(doc, "u", sys.a_list.size(), m);
        sys.v = read_vector(field(doc, "v", ""), "v", m);
      }
      return sys;
    }
    case Kind::kMatrix: {
      MatrixPayload p{read_matrix(field(doc, "A", ""), "A", {}, n), read_matrix(field(doc, "B", ""), "B", {}, n), {}, {}};
      if (p.a.rows() % m != 0) throw InputError("A: row count must be a multiple of space.m");
      if (p.b.rows() == 0 || p.b.rows() % m != 0) throw InputError("B: row count must be a positive multiple of space.m");
      p.u = read_vector(field(doc, "u", ""), "u", p.a.rows());
      p.v = read_vector(field(doc, "v", ""), "v", p.b.rows());
      return p;
    }
    case Kind::kReconstruct:
      return ReconstructPayload{read_matrix(field(doc, "A", ""), "A", m, n), read_matrix(field(doc, "B", ""), "B", m, n)};
    case Kind::kFactorize: {
      FactorizePayload p{read_matrix(field(doc, "A", ""), "A", {}, n), read_matrix(field(doc, "B", ""), "B", m, n), false};
      if (const Json* pos = optional_field(doc, "positive", "")) p.positive = read_bool(*pos, "positive");
      if (p.positive && m != 1) throw InputError("B: a positive factorization needs a single row (space.m = 1)");
      return p;
    }
    case Kind::kSublinear:
    case Kind::kLagrange: {
      SublinearPayload p;
      const Json& list = array_field(doc, "P");
      for (std::size_t k = 0; k < list.size(); ++k) p.p_list.push_back(read_sublinear(list[k], join("P", k), m, n));
      p.u_list = read_vectors(doc, "u", p.p_list.size(), m);
      p.target = read_sublinear(field(doc, "target", ""), "target", m, n);
      if (kind == Kind::kSublinear) {
        p.v = read_vector(field(doc, "v", ""), "v", m);
      } else {
        p.stratum = read_index(field(doc, "stratum", ""), "stratum");
        if (p.stratum >= m) throw InputError("stratum: must be below space.m");
      }
      return p;
    }
    case Kind::kInterval: {
      IntervalPayload p;
      const Json& list = array_field(doc, "A");
      for (std::size_t k = 0; k < list.size(); ++k) p.a_list.push_back(read_interval(list[k], join("A", k), m, n));
      p.b = read_interval(field(doc, "B", ""), "B", m, n);
      return p;
    }
    case Kind::kComplex: {
      ComplexProblem p;
      const Json& list = array_field(doc, "A");
      for (std::size_t k = 0; k < list.size(); ++k) p.a_list.push_back(read_complex_operator(list[k], join("A", k), m, n));
      p.u_list = read_vectors(doc, "u", p.a_list.size(), m);
      for (std::size_t k = 0; k < p.u_list.size(); ++k) require_nonnegative(p.u_list[k], join("u", k));
      p.b = read_complex_operator(field(doc, "B", ""), "B", m, n);
      p.v = read_vector(field(doc, "v", ""), "v", m);
      require_nonnegative(p.v, "v");
      return p;
    }
  }
  throw InputError("kind: unhandled");
}

}  // namespace

std::string kind_name(Kind kind) {
  for (const auto& [k, name] : kKinds) {
    if (k == kind) return name;
  }
  return "unknown";
}

Kind parse_kind(const std::string& name, const std::string& path) {
  std::string accepted;
  for (const auto& [k, n] : kKinds) {
    if (name == n) return k;
    accepted += accepted.empty() ? n : std::string(", ") + n;
  }
  throw InputError(path + ": unknown kind \"" + name + "\" (expected one of " + accepted + ")");
}

ProblemFile parse_problem(const std::string& text) { return parse_problem(parse_json(text)); }

ProblemFile parse_problem(const Json& doc) {
  ProblemFile out;
  out.kind = parse_kind(read_string(field(doc, "kind", ""), "kind"), "kind");
  const Json& space = field(doc, "space", "");
  out.space.n = read_index(field(space, "n", "space"), "space.n");
  out.space.m = read_index(field(space, "m", "space"), "space.m");
  if (out.space.n == 0 || out.space.m == 0) throw InputError("space: n and m must be positive");
  if (const Json* opts = optional_field(doc, "options", "")) {
    auto read_int = [&](const char* key) -> std::optional<std::size_t> {
      if (const Json* f = optional_field(*opts, key, "options")) return read_index(*f, join("options", key));
      return std::nullopt;
    };
    if (auto v = read_int("polygon_sides")) out.options.polygon_sides = static_cast<int>(*v);
    if (auto v = read_int("max_polygon_sides")) out.options.max_polygon_sides = static_cast<int>(*v);
    out.options.orthant_cap = read_int("orthant_cap");
  }
  out.payload = read_payload(out.kind, doc, out.space.m, out.space.n);
  return out;
}

Json serialize_problem(const ProblemFile& problem) {
  Json doc;
  doc["kind"] = kind_name(problem.kind);
  doc["space"] = Json{{"n", problem.space.n}, {"m", problem.space.m}};
  const auto write_matrix = [](const RatMatrix& m) { return write(m); };
  const auto write_vector = [](const RatVector& v) { return write(v); };
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, OperatorPayload>) {
          doc["A"] = write_list(p.a_list, write_matrix);
          doc["B"] = write(p.b);
          if (p.u_list) {
            doc["u"] = write_list(*p.u_list, write_vector);
            doc["v"] = write(*p.v);
          }
        } else if constexpr (std::is_same_v<T, MatrixPayload>) {
          doc["A"] = write(p.a);
          doc["B"] = write(p.b);
          doc["u"] = write(p.u);
          doc["v"] = write(p.v);
        } else if constexpr (std::is_same_v<T, ReconstructPayload>) {
          doc["A"] = write(p.a);
          doc["B"] = write(p.b);
        } else if constexpr (std::is_same_v<T, FactorizePayload>) {
          doc["A"] = write(p.a);
          doc["B"] = write(p.b);
          if (p.positive) doc["positive"] = true;
        } else if constexpr (std::is_same_v<T, SublinearPayload>) {
          doc["P"] = write_list(p.p_list, write_sublinear);
          doc["u"] = write_list(p.u_list, write_vector);
          doc["target"] = write_sublinear(p.target);
          if (problem.kind == Kind::kSublinear) {
            doc["v"] = write(p.v);
          } else {
            doc["stratum"] = p.stratum;
          }
        } else if constexpr (std::is_same_v<T, IntervalPayload>) {
          doc["A"] = write_list(p.a_list, write_interval);
          doc["B"] = write_interval(p.b);
        } else {
          doc["A"] = write_list(p.a_list, write_complex_operator);
          doc["u"] = write_list(p.u_list, write_vector);
          doc["B"] = write_complex_operator(p.b);
          doc["v"] = write(p.v);
        }
      },
      problem.payload);
  if (problem.options != FileOptions{}) {
    Json opts = Json::object();
    if (problem.options.polygon_sides) opts["polygon_sides"] = *problem.options.polygon_sides;
    if (problem.options.max_polygon_sides) opts["max_polygon_sides"] = *problem.options.max_polygon_sides;
    if (problem.options.orthant_cap) opts["orthant_cap"] = *problem.options.orthant_cap;
    doc["options"] = std::move(opts);
  }
  return doc;
}

}  // namespace farkas::cli
