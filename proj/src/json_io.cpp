#include "belyi/json_io.hpp"

#include <string>

namespace belyi::json {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::int64_t int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
    return v.get<std::int64_t>();
}

bool bool_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) throw FormatError(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

const char* kind_name(HeightJustification::Kind kind) {
    switch (kind) {
        case HeightJustification::Kind::BoundCoincidence: return "bound-coincidence";
        case HeightJustification::Kind::Enumeration: return "enumeration";
        case HeightJustification::Kind::None: return "none";
    }
    return "none";
}

HeightJustification::Kind kind_from(const std::string& name) {
    if (name == "bound-coincidence") return HeightJustification::Kind::BoundCoincidence;
    if (name == "enumeration") return HeightJustification::Kind::Enumeration;
    if (name == "none") return HeightJustification::Kind::None;
    throw FormatError("unknown justification kind '" + name + "'");
}

}  // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw FormatError("rationals must be strings like \"-9/4\"");
}

Json integer_to_json(const Integer& n) {
    if (mpz_fits_slong_p(n.get_mpz_t())) return Json(static_cast<std::int64_t>(n.get_si()));
    return Json(n.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    const Rational q = rational_from_json(j);
    if (!q.is_integer()) throw FormatError("expected an integer, got " + q.to_string());
    return q.numerator();
}

Json to_json(const Poly& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.to_string());
    return Json{{"coeffs", coeffs}};
}

Poly poly_from_json(const Json& j) {
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) throw FormatError("'coeffs' must be an array");
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(rational_from_json(c));
    return Poly(std::move(out));
}

Json to_json(const NewtonPolygon& polygon) {
    Json vertices = Json::array();
    for (const auto& v : polygon.vertices()) vertices.push_back({v.x, v.y});
    Json segments = Json::array();
    for (const auto& s : polygon.segments()) segments.push_back({{"slope", s.slope.to_string()}, {"length", s.length}});
    return Json{{"vertices", vertices}, {"segments", segments}};
}

NewtonPolygon polygon_from_json(const Json& j) {
    const Json& vertices = field(j, "vertices");
    if (!vertices.is_array()) throw FormatError("'vertices' must be an array");
    std::vector<LatticePoint> points;
    for (const auto& v : vertices) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
            throw FormatError("vertices must be [x, y] integer pairs");
        }
        points.push_back({v[0].get<std::int64_t>(), v[1].get<std::int64_t>()});
    }
    try {
        NewtonPolygon polygon = NewtonPolygon::from_vertices(std::move(points));
        if (j.contains("segments")) {
            const auto expected = to_json(polygon).at("segments");
            if (j.at("segments") != expected) throw FormatError("segments disagree with vertices");
        }
        return polygon;
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Json to_json(const ValuationProfile& profile) {
    Json entries = Json::array();
    for (const auto& e : profile.entries) {
        entries.push_back({{"valuation", e.valuation.to_string()}, {"multiplicity", e.multiplicity}});
    }
    return Json{{"zero_multiplicity", profile.zero_multiplicity}, {"entries", entries}};
}

ValuationProfile profile_from_json(const Json& j) {
    ValuationProfile profile{int_field(j, "zero_multiplicity"), {}};
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw FormatError("'entries' must be an array");
    for (const auto& e : entries) {
        profile.entries.push_back({rational_from_json(field(e, "valuation")), int_field(e, "multiplicity")});
    }
    return profile;
}

Json to_json(const MinusOneReport& report) {
    return Json{{"j", report.j},
                {"v_j", {report.polygon.vertices()[report.j].x, report.polygon.vertices()[report.j].y}},
                {"polygon", to_json(report.polygon)},
                {"minus_one_polygon", to_json(report.minus_one_polygon)},
                {"single_segment", is_single_segment(report.minus_one_polygon)},
                {"shape_ok", report.shape_ok},
                {"slope_order_ok", report.slope_order_ok}};
}

Json to_json(const BelyiCertificate& cert) {
    return Json{{"subject", to_json(cert.subject)},
                {"value_at_0", cert.value_at_0},
                {"value_at_1", cert.value_at_1},
                {"quotient", to_json(cert.quotient)}};
}

BelyiCertificate certificate_from_json(const Json& j) {
    BelyiCertificate cert{poly_from_json(field(j, "subject")), static_cast<int>(int_field(j, "value_at_0")),
                          static_cast<int>(int_field(j, "value_at_1")), poly_from_json(field(j, "quotient"))};
    if (!cert.recheck()) throw FormatError("certificate does not verify for " + cert.subject.to_string());
    return cert;
}

Json to_json(const BelyiFailure& failure) {
    const char* condition = failure.condition == BelyiFailure::Condition::EndpointZero   ? "endpoint-0"
                            : failure.condition == BelyiFailure::Condition::EndpointOne ? "endpoint-1"
                                                                                        : "critical-values";
    return Json{{"belyi", false}, {"condition", condition}, {"reason", failure.reason}};
}

Json to_json(const ConstructionTrace& trace) {
    Json steps = Json::array();
    for (const auto& step : trace.steps) {
        Json s = Json::object();
        s["affine"] = step.affine ? Json{{"gamma", step.affine->gamma.to_string()}, {"alpha", step.affine->alpha.to_string()}}
                                  : Json(nullptr);
        s["belyi_ab"] = step.belyi_ab ? Json::array({step.belyi_ab->first, step.belyi_ab->second}) : Json(nullptr);
        steps.push_back(std::move(s));
    }
    return Json{{"lambda", trace.lambda ? Json(trace.lambda->to_string()) : Json(nullptr)},
                {"image_of_lambda", trace.image_of_lambda ? Json(*trace.image_of_lambda) : Json(nullptr)},
                {"base", to_json(trace.base)},
                {"steps", steps},
                {"degree", trace.result.subject.degree()},
                {"certificate", to_json(trace.result)}};
}

ConstructionTrace trace_from_json(const Json& j) {
    ConstructionTrace trace{poly_from_json(field(j, "base")), {}, certificate_from_json(field(j, "certificate")),
                            std::nullopt, std::nullopt};
    if (const Json& l = field(j, "lambda"); !l.is_null()) trace.lambda = rational_from_json(l);
    if (const Json& im = field(j, "image_of_lambda"); !im.is_null()) trace.image_of_lambda = im.get<int>();
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) throw FormatError("'steps' must be an array");
    for (const auto& s : steps) {
        ConstructionStep step;
        if (const Json& a = field(s, "affine"); !a.is_null()) {
            step.affine = AffineMap{rational_from_json(field(a, "gamma")), rational_from_json(field(a, "alpha"))};
        }
        if (const Json& ab = field(s, "belyi_ab"); !ab.is_null()) {
            if (!ab.is_array() || ab.size() != 2) throw FormatError("'belyi_ab' must be [a, b]");
            step.belyi_ab = std::pair{ab[0].get<std::int64_t>(), ab[1].get<std::int64_t>()};
        }
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

Json to_json(const HeightBounds& bounds) {
    Json justification{{"kind", kind_name(bounds.justification.kind)}};
    if (bounds.justification.kind == HeightJustification::Kind::Enumeration) {
        justification["excluded_max_degree"] = bounds.justification.excluded_max_degree;
        justification["excluded_count"] = bounds.justification.excluded_count;
    }
    return Json{{"lambda", bounds.lambda.to_string()},
                {"lower", integer_to_json(bounds.lower)},
                {"upper", bounds.upper},
                {"exact", bounds.exact},
                {"height", bounds.exact ? Json(bounds.upper) : Json(nullptr)},
                {"witness_source", bounds.witness_source},
                {"justification", justification},
                {"witness", to_json(bounds.witness)}};
}

HeightBounds height_from_json(const Json& j) {
    const Json& just = field(j, "justification");
    HeightJustification justification{kind_from(field(just, "kind").get<std::string>()), 0, 0};
    if (justification.kind == HeightJustification::Kind::Enumeration) {
        justification.excluded_max_degree = static_cast<std::size_t>(int_field(just, "excluded_max_degree"));
        justification.excluded_count = static_cast<std::size_t>(int_field(just, "excluded_count"));
    }
    return {rational_from_json(field(j, "lambda")),
            integer_from_json(field(j, "lower")),
            static_cast<std::size_t>(int_field(j, "upper")),
            certificate_from_json(field(j, "witness")),
            field(j, "witness_source").get<std::string>(),
            bool_field(j, "exact"),
            justification};
}

}  // namespace belyi::json
