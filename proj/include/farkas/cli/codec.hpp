#pragma once

// Exact JSON encoding: rationals travel as strings ("3", "-2/5"); JSON
// integers are accepted on input. Every reader names the offending field.

#include <optional>
#include <stdexcept>
#include <string>

#include "farkas/exact/matrix.hpp"
#include "farkas/model/kantorovich.hpp"
#include "json.hpp"

namespace farkas::cli {

using Json = nlohmann::ordered_json;

/// Malformed input: a syntax error with line and column, or a field path.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses text, turning syntax errors into InputError with line and column.
Json parse_json(const std::string& text);

const Json& field(const Json& obj, const std::string& key, const std::string& path);
const Json* optional_field(const Json& obj, const std::string& key, const std::string& path);
std::string join(const std::string& path, const std::string& key);
std::string join(const std::string& path, std::size_t index);

Rational read_rational(const Json& j, const std::string& path);
std::size_t read_index(const Json& j, const std::string& path);
bool read_bool(const Json& j, const std::string& path);
std::string read_string(const Json& j, const std::string& path);
/// `dim` checks the length when given.
RatVector read_vector(const Json& j, const std::string& path, std::optional<std::size_t> dim = {});
/// Array of rows; `rows` and `cols` check the shape when given. An empty
/// array reads as 0 x cols.
RatMatrix read_matrix(const Json& j, const std::string& path, std::optional<std::size_t> rows = {},
                      std::optional<std::size_t> cols = {});
ComplexRational read_complex(const Json& j, const std::string& path);
/// Mask string such as "0110" of length m.
Projection read_projection(const Json& j, const std::string& path, std::size_t m);

Json write(const Rational& r);
Json write(const RatVector& v);
Json write(const RatMatrix& m);
Json write(const ComplexRational& c);
Json write(const Projection& p);

}  // namespace farkas::cli
