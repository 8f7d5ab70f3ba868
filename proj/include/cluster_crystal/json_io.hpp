#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cluster_crystal/cartan.hpp"
#include "cluster_crystal/matrix.hpp"
#include "cluster_crystal/seed.hpp"
#include "cluster_crystal/tori.hpp"

namespace cluster_crystal {

using Json = nlohmann::ordered_json;

/// Comma-separated letters, e.g. "1,2,1".
std::vector<int> parse_word(std::string_view text);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json cartan_to_json(const CartanMatrix& a);
CartanMatrix cartan_from_json(const Json& j);

Json seed_to_json(const Seed& seed);
/// Rebuilds the seed from cartan, word and history, then checks any stored
/// exchange matrix and hash against the rebuilt one.
SeedPtr seed_from_json(const Json& j);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json point_to_json(const APoint& p);
Json point_to_json(const XPoint& p);
Json point_to_json(const TropPoint& p);
APoint a_point_from_json(const Json& j);
XPoint x_point_from_json(const Json& j);
TropPoint trop_point_from_json(const Json& j);

}  // namespace cluster_crystal
