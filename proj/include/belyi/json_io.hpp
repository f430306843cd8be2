#pragma once

// JSON forms of the library's values. Every number that is not a small count
// or index travels as a Rational string ("a/b" or "a").

#include <json.hpp>

#include "belyi/belyi.hpp"
#include "belyi/construct.hpp"
#include "belyi/height.hpp"
#include "belyi/newton.hpp"
#include "belyi/poly.hpp"

namespace belyi::json {

using Json = nlohmann::ordered_json;

/// Thrown for JSON documents that do not have the expected shape.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json to_json(const Poly& f);
Poly poly_from_json(const Json& j);

Json to_json(const NewtonPolygon& polygon);
NewtonPolygon polygon_from_json(const Json& j);

Json to_json(const ValuationProfile& profile);
ValuationProfile profile_from_json(const Json& j);

Json to_json(const MinusOneReport& report);

Json to_json(const BelyiCertificate& cert);
/// Parses and re-checks; throws FormatError if the certificate does not verify.
BelyiCertificate certificate_from_json(const Json& j);

Json to_json(const BelyiFailure& failure);

Json to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const Json& j);

Json to_json(const HeightBounds& bounds);
HeightBounds height_from_json(const Json& j);

/// Integer as a JSON number when it fits in 64 bits, else as a decimal string.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

Rational rational_from_json(const Json& j);

}  // namespace belyi::json
