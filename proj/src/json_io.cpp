#include "cluster_crystal/json_io.hpp"

#include <charconv>
#include <map>

namespace cluster_crystal {

namespace {

[[noreturn]] void bad(const std::string& detail) { throw UsageError("invalid_json", detail); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid_integer", "cannot parse integer '" + std::string(text) + "'");
  }
  return value;
}

template <class Tag, class V, class Conv>
Json point_json(const Point<Tag, V>& p, Conv conv) {
  Json coords = Json::object();
  for (SeedIndex k : p.seed().indices()) coords[std::to_string(k)] = conv(p[k]);
  return Json{{"seed", seed_to_json(p.seed())}, {"coords", coords}};
}

template <class P, class Conv>
P point_from(const Json& j, Conv conv) {
  SeedPtr seed = seed_from_json(field(j, "seed"));
  const Json& coords = field(j, "coords");
  if (!coords.is_object()) bad("'coords' must be an object keyed by seed index");
  std::map<SeedIndex, typename P::value_type> values;
  for (const auto& [key, value] : coords.items()) values.emplace(parse_int(key), conv(value));
  try {
    return P::from_map(std::move(seed), values);
  } catch (const DomainError& e) {
    if (e.kind() == "chart_boundary") throw;
    throw UsageError("invalid_point", e.what());
  }
}

}  // namespace

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> word;
  if (text.empty()) return word;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    word.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rationals are written as \"p/q\" strings or integers");
}

Json cartan_to_json(const CartanMatrix& a) {
  if (!a.label().empty()) {
    return Json{{"type", a.label().substr(0, 1)}, {"rank", a.rank()}};
  }
  return Json{{"matrix", a.entries()}, {"symmetrizer", a.symmetrizer()}};
}

CartanMatrix cartan_from_json(const Json& j) {
  if (j.is_string()) return CartanMatrix::parse(j.get<std::string>());
  if (j.contains("type")) {
    const std::string type = field(j, "type").get<std::string>();
    if (type.size() != 1) bad("Cartan 'type' is a single letter");
    return CartanMatrix::finite_type(type[0], field(j, "rank").get<int>());
  }
  CartanMatrix a = CartanMatrix::from_entries(field(j, "matrix").get<std::vector<std::vector<int>>>());
  if (j.contains("symmetrizer") && j.at("symmetrizer").get<std::vector<int>>() != a.symmetrizer()) {
    bad("stored symmetrizer differs from the minimal one");
  }
  return a;
}

Json seed_to_json(const Seed& seed) {
  Json b = Json::array();
  for (std::size_t r = 0; r < seed.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < seed.size(); ++c) row.push_back(format_rational(seed.exchange_matrix()(r, c)));
    b.push_back(std::move(row));
  }
  std::vector<int> d;
  for (SeedIndex k : seed.indices()) d.push_back(seed.d(k));
  return Json{{"cartan", cartan_to_json(seed.cartan())},
              {"word", seed.word()},
              {"I", seed.indices()},
              {"frozen", seed.frozen()},
              {"B", b},
              {"d", d},
              {"history", seed.history()},
              {"hash", seed.content_hash()}};
}

SeedPtr seed_from_json(const Json& j) {
  CartanMatrix a = cartan_from_json(field(j, "cartan"));
  const auto word = field(j, "word").get<std::vector<int>>();
  Seed seed = Seed::from_word(std::move(a), word);
  if (j.contains("history")) {
    for (SeedIndex k : j.at("history").get<std::vector<int>>()) seed = seed.mutate(k);
  }
  if (j.contains("B")) {
    const Json& b = j.at("B");
    if (!b.is_array() || b.size() != seed.size()) bad("exchange matrix has the wrong shape");
    for (std::size_t r = 0; r < seed.size(); ++r) {
      if (!b[r].is_array() || b[r].size() != seed.size()) bad("exchange matrix has the wrong shape");
      for (std::size_t c = 0; c < seed.size(); ++c) {
        if (rational_from_json(b[r][c]) != seed.exchange_matrix()(r, c)) {
          bad("stored exchange matrix disagrees with the one rebuilt from word and history");
        }
      }
    }
  }
  if (j.contains("hash") && j.at("hash").get<std::string>() != seed.content_hash()) {
    bad("stored seed hash does not match its content");
  }
  return std::make_shared<const Seed>(std::move(seed));
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  RationalMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) bad("matrix rows must have equal length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json point_to_json(const APoint& p) { return point_json(p, rational_to_json); }
Json point_to_json(const XPoint& p) { return point_json(p, rational_to_json); }
Json point_to_json(const TropPoint& p) {
  return point_json(p, [](std::int64_t v) { return Json(v); });
}

APoint a_point_from_json(const Json& j) { return point_from<APoint>(j, rational_from_json); }
XPoint x_point_from_json(const Json& j) { return point_from<XPoint>(j, rational_from_json); }
TropPoint trop_point_from_json(const Json& j) {
  return point_from<TropPoint>(j, [](const Json& v) -> std::int64_t {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) return parse_int(v.get<std::string>());
    bad("tropical coordinates are integers");
  });
}

}  // namespace cluster_crystal
