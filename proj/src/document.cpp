#include "toricfan/document.hpp"

#include "toricfan/error.hpp"

#include "json.hpp"

#include <algorithm>

namespace toricfan {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

Integer read_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<unsigned long long>()))
                                  : Integer(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0) fail(where, "not a decimal integer");
    return out;
  }
  fail(where, "expected an integer");
}

LatticeVector read_vector(const json& v, std::size_t d, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an integer vector");
  if (v.size() != d) {
    throw Error(ErrorCode::DimensionMismatch, where + ": vector has length " + std::to_string(v.size()) +
                                                  ", ambient_dim is " + std::to_string(d));
  }
  LatticeVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_integer(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

FanDocument parse_fan(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": malformed JSON");
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");

  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail("name", "expected a string");
    name = it->get<std::string>();
  }

  auto dim_it = doc.find("ambient_dim");
  if (dim_it == doc.end()) fail("ambient_dim", "missing");
  if (!dim_it->is_number_integer() || dim_it->get<long long>() < 1) fail("ambient_dim", "expected a positive integer");
  const auto d = static_cast<std::size_t>(dim_it->get<long long>());

  std::vector<LatticeVector> rays;
  if (auto it = doc.find("rays"); it != doc.end()) {
    if (!it->is_array()) fail("rays", "expected a list of vectors");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "rays[" + std::to_string(i) + "]";
      rays.push_back(read_vector((*it)[i], d, where));
      if (toricfan::is_zero(rays.back())) fail(where, "ray is the zero vector");
    }
  }

  auto cones_it = doc.find("maximal_cones");
  if (cones_it == doc.end()) fail("maximal_cones", "missing");
  if (!cones_it->is_array()) fail("maximal_cones", "expected a list of cones");

  std::vector<Cone> cones;
  for (std::size_t c = 0; c < cones_it->size(); ++c) {
    const std::string where = "maximal_cones[" + std::to_string(c) + "]";
    const json& entry = (*cones_it)[c];
    if (!entry.is_array()) fail(where, "expected a list of ray indices or vectors");
    std::vector<LatticeVector> gens;
    for (std::size_t k = 0; k < entry.size(); ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      const json& g = entry[k];
      if (g.is_array()) {
        gens.push_back(read_vector(g, d, at));
      } else if (g.is_number_integer()) {
        long long idx = g.get<long long>();
        if (idx < 0 || static_cast<std::size_t>(idx) >= rays.size()) {
          fail(at, "ray index " + std::to_string(idx) + " out of range");
        }
        gens.push_back(rays[static_cast<std::size_t>(idx)]);
      } else {
        fail(at, "expected a ray index or an inline vector");
      }
    }
    try {
      cones.push_back(Cone::from_generators(gens, d));
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  if (cones.empty()) cones.push_back(Cone::zero(d));
  return FanDocument{std::move(name), Fan::build(cones, d)};
}

}  // namespace toricfan
