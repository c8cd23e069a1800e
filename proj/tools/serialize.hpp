#pragma once

#include <json.hpp>

#include "eigenkit/padic/newton_polygon.hpp"
#include "eigenkit/padic/polynomial.hpp"
#include "eigenkit/padic/series.hpp"
#include "eigenkit/weight/character.hpp"

namespace eigenkit::cli {

using Json = nlohmann::ordered_json;

std::string rational_string(const padic::Rational& r);
// Values with more digits than `cap` are reported at precision cap.
Json to_json(const padic::PadicScalar& x, int cap);
Json to_json(const std::vector<padic::PadicScalar>& v, int cap);
Json to_json(const padic::Polynomial& f, int cap);
Json to_json(const padic::TruncatedSeries& f, int cap);
Json to_json(const padic::NewtonPolygon& np);
Json to_json(const weight::Character& kappa, int cap);

// Largest "abs" field anywhere in the document, or nullopt if there is none.
std::optional<int> max_claimed_precision(const Json& j);

// key,value rows with dotted paths for nested values.
std::string to_csv(const Json& payload);

}  // namespace eigenkit::cli
