#include "belyi/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "belyi/construct.hpp"
#include "belyi/height.hpp"
#include "belyi/newton.hpp"

namespace belyi::suites {

namespace {

constexpr std::size_t kKeptFailures = 50;
constexpr std::uint64_t kRandomPolySeed = 0xBE1A1;

template <class Body>
CheckReport timed(std::string name, Body&& body) {
    CheckReport report;
    report.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(report);
    } catch (const std::exception& e) {
        report.expect(false, std::string("unexpected exception: ") + e.what());
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string at(const Poly& f, const Prime& p) { return f.to_string() + " at p=" + std::to_string(p.value()); }

bool in_zero_one(const Rational& v) { return v == Rational(0) || v == Rational(1); }

}  // namespace

void CheckReport::expect(bool condition, const std::string& what) {
    ++checks;
    if (condition) return;
    if (failures.size() < kKeptFailures) {
        failures.push_back(what);
    } else {
        ++extra_failures_;
        failures.back() = "... and " + std::to_string(extra_failures_) + " more";
    }
}

bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.ok(); });
}

std::size_t SuiteReport::failure_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures.size();
    return n;
}

std::vector<Prime> primes_up_to(std::uint64_t ceiling) {
    std::vector<Prime> out;
    for (std::uint64_t n = 2; n <= ceiling; ++n) {
        if (is_prime(n)) out.emplace_back(n);
    }
    return out;
}

CheckReport hull_soundness(const std::vector<Poly>& polys, const std::vector<Prime>& primes) {
    return timed("hull soundness", [&](CheckReport& r) {
        for (const auto& f : polys) {
            for (const auto& p : primes) {
                const auto points = coeff_points(f, p);
                const auto polygon = newton_polygon(f, p);
                const auto& v = polygon.vertices();
                bool above = true;
                for (std::size_t i = 1; i < v.size(); ++i) {
                    for (const auto& q : points) {
                        // q on or above the line through v[i-1], v[i]
                        const __int128 lhs = static_cast<__int128>(q.y - v[i - 1].y) * (v[i].x - v[i - 1].x);
                        const __int128 rhs = static_cast<__int128>(v[i].y - v[i - 1].y) * (q.x - v[i - 1].x);
                        above = above && lhs >= rhs;
                    }
                }
                r.expect(above, "coefficient point below a segment line: " + at(f, p));
                const auto segs = polygon.segments();
                const bool increasing = std::adjacent_find(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
                                            return !(a.slope < b.slope);
                                        }) == segs.end();
                r.expect(increasing, "slopes not strictly increasing: " + at(f, p));
                r.expect((v.size() == 1) == f.is_monomial(), "single vertex iff monomial fails: " + at(f, p));
                r.expect(v.front().x == points.front().x && v.back().x == points.back().x,
                         "polygon does not span the coefficient range: " + at(f, p));
            }
        }
    });
}

CheckReport minus_one_lemma(const std::vector<Poly>& polys, const std::vector<Prime>& primes) {
    return timed("lemma: polygons of f and f-1", [&](CheckReport& r) {
        for (const auto& f : polys) {
            for (const auto& p : primes) {
                const auto report = minus_one_relation(f, p);
                r.expect(report.shape_ok && report.slope_order_ok, "f/f-1 relation fails: " + at(f, p));
            }
        }
    });
}

CheckReport shift_lemma(const std::vector<Poly>& polys, const std::vector<Prime>& primes) {
    return timed("lemma: New(f) = New(x f') for deg f < p", [&](CheckReport& r) {
        for (const auto& f : polys) {
            for (const auto& p : primes) {
                if (static_cast<std::uint64_t>(f.degree()) >= p.value()) continue;
                r.expect(check_shift_lemma(f, p), "shift lemma fails: " + at(f, p));
            }
        }
    });
}

CheckReport monomial_criterion(std::size_t max_degree) {
    return timed("lemma: f' | f^2 with f(0)=0 iff monomial", [&](CheckReport& r) {
        const std::vector<Rational> values{0, -2, -1, 1, 2, Rational(1, 2)};
        for (std::size_t degree = 1; degree <= max_degree; ++degree) {
            // Odometer over coefficients of x^1 .. x^degree; the leading digit skips 0.
            std::vector<std::size_t> digit(degree + 1, 0);
            digit[degree] = 1;
            for (;;) {
                std::vector<Rational> coeffs(degree + 1);
                for (std::size_t i = 1; i <= degree; ++i) coeffs[i] = values[digit[i]];
                const Poly f(std::move(coeffs));
                r.expect(divides_square(f) == f.is_monomial(), "criterion fails for " + f.to_string());
                std::size_t k = 1;
                while (k <= degree) {
                    if (++digit[k] < values.size()) break;
                    digit[k] = (k == degree) ? 1 : 0;
                    ++k;
                }
                if (k > degree) break;
            }
        }
    });
}

CheckReport certificates_recheck(const std::vector<BelyiCertificate>& corpus) {
    return timed("certificates re-check", [&](CheckReport& r) {
        for (const auto& c : corpus) {
            r.expect(c.recheck(), "certificate does not re-check: " + c.subject.to_string());
            r.expect(std::holds_alternative<BelyiCertificate>(certify(c.subject)),
                     "corpus element fails certify: " + c.subject.to_string());
        }
    });
}

CheckReport family_laws(std::int64_t max_b, std::size_t chebyshev_max_n) {
    return timed("B_{a,b} and Chebyshev families", [&](CheckReport& r) {
        for (std::int64_t b = 1; b <= max_b; ++b) {
            for (std::int64_t a = 1; a <= b; ++a) {
                const Poly f = belyi_ab(a, b);
                const std::string name = "B_{" + std::to_string(a) + "," + std::to_string(b) + "}";
                r.expect(std::holds_alternative<BelyiCertificate>(certify(f)), name + " fails certify");
                r.expect(f.evaluate(Rational(a, b)) == Rational(1), name + "(a/b) != 1");
                r.expect(f.evaluate(0) == Rational(0), name + "(0) != 0");
                if (b > a) r.expect(f.evaluate(1) == Rational(0), name + "(1) != 0");
                r.expect(f.degree() == b, name + " has wrong degree");
            }
        }
        for (std::size_t n = 1; n <= chebyshev_max_n; ++n) {
            const Poly f = chebyshev_belyi(n);
            r.expect(std::holds_alternative<BelyiCertificate>(certify(f)),
                     "chebyshev_belyi(" + std::to_string(n) + ") fails certify");
        }
    });
}

CheckReport composition_closure(const CorpusSpec& spec) {
    return timed("composition closure", [&](CheckReport& r) {
        CorpusSpec one = spec;
        one.max_chain = 1;
        const auto generators = belyi_corpus(one);
        for (const auto& outer : generators) {
            for (const auto& inner : generators) {
                const Poly composed = outer.subject.compose(inner.subject);
                r.expect(std::holds_alternative<BelyiCertificate>(certify(composed)),
                         "composition not Belyi: (" + outer.subject.to_string() + ") o (" + inner.subject.to_string() + ")");
                r.expect(composed.compose(Poly::x()) == composed && Poly::x().compose(composed) == composed,
                         "x is not a two-sided identity");
            }
        }
    });
}

CheckReport complement_closure(const std::vector<BelyiCertificate>& corpus) {
    return timed("1 - B is Belyi", [&](CheckReport& r) {
        for (const auto& c : corpus) {
            r.expect(std::holds_alternative<BelyiCertificate>(certify(Poly::constant(1) - c.subject)),
                     "1 - B not Belyi for " + c.subject.to_string());
        }
    });
}

CheckReport construction_soundness(std::int64_t bound) {
    return timed("construction for rational lambda", [&](CheckReport& r) {
        std::set<Rational> lambdas;
        for (std::int64_t a = -bound; a <= bound; ++a) {
            for (std::int64_t b = 1; b <= bound; ++b) lambdas.insert(Rational(Integer(static_cast<long>(a)), Integer(static_cast<long>(b))));
        }
        for (const auto& lambda : lambdas) {
            const auto trace = belyi_for_rational(lambda);
            const std::string name = "lambda=" + lambda.to_string();
            r.expect(trace.result.recheck(), name + ": certificate does not verify");
            const Rational image = trace.result.subject.evaluate(lambda);
            r.expect(in_zero_one(image) && trace.image_of_lambda && image == Rational(*trace.image_of_lambda),
                     name + ": image not in {0,1}");
            r.expect(replay(trace.base, trace.steps) == trace.result.subject, name + ": replay differs");
            // Degree of the interior value's denominator, written out per case.
            const Integer a = lambda.numerator();
            const Integer b = lambda.denominator();
            Integer expected = 1;
            if (lambda > Rational(1)) {
                expected = a;
            } else if (lambda.sign() < 0) {
                expected = b - a;
            } else if (lambda != Rational(1) && !lambda.is_zero()) {
                expected = b;
            }
            r.expect(Integer(static_cast<long>(trace.result.subject.degree())) == expected, name + ": unexpected degree");
        }
    });
}

CheckReport containment_and_single_segment(const std::vector<BelyiCertificate>& corpus, std::uint64_t ceiling) {
    return timed("theorems: containment and single segment for deg B < p", [&](CheckReport& r) {
        const auto primes = primes_up_to(ceiling);
        for (const auto& c : corpus) {
            const Poly& b = c.subject;
            if (!b.coeff(0).is_zero()) continue;
            for (const auto& p : primes) {
                if (static_cast<std::uint64_t>(b.degree()) >= p.value()) continue;
                r.expect(check_containment(b, p), "containment fails: " + at(b, p));
                r.expect(is_single_segment(newton_polygon(b - Poly::constant(1), p)),
                         "New(B-1) not a single segment: " + at(b, p));
            }
        }
    });
}

CheckReport root_prime_audit(const std::vector<BelyiCertificate>& corpus) {
    return timed("theorem: primes of roots of B and B-1 are <= deg B", [&](CheckReport& r) {
        for (const auto& c : corpus) {
            const Poly& b = c.subject;
            const auto degree = static_cast<unsigned long>(b.degree());
            for (const Poly& f : {b, b - Poly::constant(1)}) {
                for (const auto& root : rational_roots(f)) {
                    if (root.is_zero()) continue;
                    for (const auto& [prime, exponent] : prime_support(root)) {
                        r.expect(prime <= degree, "root " + root.to_string() + " of " + f.to_string() + " has prime " +
                                                      prime.get_str() + " > deg B");
                    }
                }
            }
        }
    });
}

CheckReport sharpness(const std::vector<std::uint64_t>& primes) {
    return timed("sharpness: H(p) = H(1/p) = p", [&](CheckReport& r) {
        for (const auto p : primes) {
            const Rational inv_p(Integer(1), Integer(static_cast<unsigned long>(p)));
            const auto pi = static_cast<std::int64_t>(p);
            const Poly bp = belyi_ab(1, pi);
            const Poly scaled = bp.compose(Poly{0, inv_p});
            for (const auto& [lambda, expected_witness] : {std::pair{Rational(pi), scaled}, std::pair{inv_p, bp}}) {
                const auto h = height(lambda);
                const std::string name = "H(" + lambda.to_string() + ")";
                r.expect(h.exact && h.upper == p && h.lower == static_cast<unsigned long>(p), name + " != " + std::to_string(p));
                r.expect(h.witness.recheck() && in_zero_one(h.witness.subject.evaluate(lambda)), name + ": witness invalid");
                r.expect(h.witness.subject == expected_witness, name + ": witness is not B_{1,p} form");
            }
        }
    });
}

CheckReport height_of_four() {
    return timed("H(4) = 3", [&](CheckReport& r) {
        const Rational four(4);
        r.expect(lower_bound(four) == 2, "lower bound for 4 is not 2");
        const auto& low = enumerate_low_degree();
        r.expect(low.size() == 8, "degree <= 2 enumeration does not have 8 members");
        for (const auto& c : low) {
            r.expect(!in_zero_one(c.subject.evaluate(four)), c.subject.to_string() + " sends 4 into {0,1}");
        }
        const Poly witness = Rational(-1, 4) * Poly{-1, 1} * Poly{-1, 1} * Poly{-4, 1};
        r.expect(std::holds_alternative<BelyiCertificate>(certify(witness)), "-(x-1)^2(x-4)/4 fails certify");
        const auto h = height(four);
        r.expect(h.exact && h.lower == 2 && h.upper == 3 && h.witness.subject == witness, "height(4) is not exactly 3");
        r.expect(h.justification.kind == HeightJustification::Kind::Enumeration && h.justification.excluded_count == 8,
                 "height(4) is not justified by the degree <= 2 enumeration");
    });
}

CheckReport hull_oracle(const std::vector<Poly>& polys, const std::vector<Prime>& primes) {
    return timed("hull vs brute-force extreme points", [&](CheckReport& r) {
        for (const auto& f : polys) {
            for (const auto& p : primes) {
                const auto pts = coeff_points(f, p);
                // A point is a lower-hull vertex unless it lies on or above a chord between points on either side.
                std::vector<LatticePoint> expected;
                for (const auto& q : pts) {
                    bool extreme = true;
                    for (const auto& a : pts) {
                        if (a.x >= q.x) continue;
                        for (const auto& b : pts) {
                            if (b.x <= q.x) continue;
                            const __int128 lhs = static_cast<__int128>(q.y - a.y) * (b.x - a.x);
                            const __int128 rhs = static_cast<__int128>(b.y - a.y) * (q.x - a.x);
                            if (lhs >= rhs) extreme = false;
                        }
                    }
                    if (extreme) expected.push_back(q);
                }
                r.expect(newton_polygon(f, p).vertices() == expected, "hull mismatch: " + at(f, p));
            }
        }
    });
}

CheckReport profile_oracle(const std::vector<SplitPoly>& corpus, const std::vector<Prime>& primes) {
    return timed("root-valuation profile vs known roots", [&](CheckReport& r) {
        for (const auto& s : corpus) {
            for (const auto& p : primes) {
                std::map<std::int64_t, std::int64_t, std::greater<>> by_valuation;
                for (const auto& root : s.roots) ++by_valuation[valuation(root, p).value()];
                ValuationProfile expected{static_cast<std::int64_t>(s.zero_multiplicity), {}};
                for (const auto& [v, m] : by_valuation) expected.entries.push_back({Rational(v), m});
                r.expect(valuation_profile(s.poly, p) == expected, "profile mismatch: " + at(s.poly, p));
            }
        }
    });
}

CheckReport rescaled_top_segment(const std::vector<SplitPoly>& corpus, const std::vector<Prime>& primes) {
    return timed("rescaling by a root of least valuation", [&](CheckReport& r) {
        for (const auto& s : corpus) {
            if (s.roots.empty()) continue;
            const auto n = static_cast<std::int64_t>(s.poly.degree());
            for (const auto& p : primes) {
                const Rational gamma = *std::min_element(s.roots.begin(), s.roots.end(), [&](const Rational& a, const Rational& b) {
                    return valuation(a, p) < valuation(b, p);
                });
                const Poly rescaled = (s.scale * pow(gamma, n)).inverse() * s.poly.compose(Poly{0, gamma});
                const auto v = newton_polygon(rescaled, p).vertices();
                const bool on_axis = v.size() >= 2 && v[v.size() - 1].y == 0 && v[v.size() - 2].y == 0;
                const bool integral = std::all_of(v.begin(), v.end(), [](const LatticePoint& q) { return q.y >= 0; });
                r.expect(rescaled.leading() == Rational(1) && on_axis && integral, "top segment off axis: " + at(s.poly, p));
            }
        }
    });
}

SuiteReport run_suite(std::string_view name, const CorpusSpec& spec) {
    if (std::find(std::begin(kSuiteNames), std::end(kSuiteNames), name) == std::end(kSuiteNames)) {
        throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    }
    SuiteReport report{std::string(name), {}};
    const bool all = name == "all";
    const auto primes = primes_up_to(spec.prime_ceiling);
    const auto random = vanishing_poly_corpus(spec.seed ^ kRandomPolySeed, kRandomPolyCount, kRandomPolyMaxDegree);

    if (all || name == "polygon-laws") {
        report.checks.push_back(hull_soundness(random, primes));
        report.checks.push_back(minus_one_lemma(random, primes));
        report.checks.push_back(shift_lemma(random, primes));
        report.checks.push_back(monomial_criterion());
    }
    std::vector<BelyiCertificate> corpus;
    if (all || name == "belyi-laws" || name == "theorems") corpus = belyi_corpus(spec);
    if (all || name == "belyi-laws") {
        report.checks.push_back(certificates_recheck(corpus));
        report.checks.push_back(family_laws());
        report.checks.push_back(composition_closure(spec));
        report.checks.push_back(complement_closure(corpus));
        report.checks.push_back(construction_soundness());
    }
    if (all || name == "theorems") {
        report.checks.push_back(containment_and_single_segment(corpus, spec.prime_ceiling));
        report.checks.push_back(root_prime_audit(corpus));
        report.checks.push_back(sharpness());
        report.checks.push_back(height_of_four());
    }
    if (all || name == "oracles") {
        const auto split = split_poly_corpus(spec);
        report.checks.push_back(hull_oracle(random, primes));
        report.checks.push_back(profile_oracle(split, primes));
        report.checks.push_back(rescaled_top_segment(split, primes));
    }
    return report;
}

json::Json to_json(const CheckReport& report) {
    return json::Json{{"name", report.name},
                      {"checks", report.checks},
                      {"failures", report.failures},
                      {"ok", report.ok()},
                      {"milliseconds", static_cast<std::int64_t>(report.seconds * 1000.0)}};
}

json::Json to_json(const SuiteReport& report) {
    json::Json checks = json::Json::array();
    for (const auto& c : report.checks) checks.push_back(to_json(c));
    return json::Json{{"suite", report.suite}, {"ok", report.ok()}, {"failures", report.failure_count()}, {"checks", checks}};
}

}  // namespace belyi::suites
