#pragma once

// JSON region and shuffle descriptors.
//
//   {"type":"hexagon","a":3,"b":8,"c":4,"X":[2,3,5,8,9,11],"Y":[3,7]}
//   {"type":"trapezoid","m":8,"n":5,"S":[1,4,5,9,12]}
//   {"source": <hexagon>, "Xp":[...], "Yp":[...]}

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "lozenge/exact.hpp"
#include "lozenge/regions.hpp"

namespace lozenge {

using Json = nlohmann::ordered_json;
using Region = std::variant<DentedHexagon, Trapezoid>;

/// Malformed input: not JSON, missing keys, wrong value types, or an
/// unsupported feature. Region-level invalidity is a DomainError instead.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShuffleDescriptor {
  Json source;
  DentSet new_up;
  DentSet new_down;
};

Json parse_json(const std::string& text);

Region parse_region(const Json& j);
Json to_json(const Region& r);
Json to_json(const DentedHexagon& h);
Json to_json(const Trapezoid& t);

/// Only parses the shape; the source region is validated by the caller so
/// region errors and shuffle errors stay distinguishable.
ShuffleDescriptor parse_shuffle(const Json& j);

CellGrid build_cells(const Region& r);
std::string describe(const Region& r);

/// Decimal strings, lowest degree first.
Json coefficients_json(const QPolynomial& p);

}  // namespace lozenge
