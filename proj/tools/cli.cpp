#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "belyi/construct.hpp"
#include "belyi/height.hpp"
#include "belyi/height_table.hpp"
#include "belyi/json_io.hpp"
#include "belyi/newton.hpp"
#include "belyi/suites.hpp"

namespace belyi::cli {

namespace {

using json::Json;

constexpr const char* kDefaultTable = "belyi_heights.jsonl";

// Input-shape problems; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Poly read_poly(const std::string& arg, std::istream& in) {
    std::string text = arg;
    if (text.empty() || text == "-") text.assign(std::istreambuf_iterator<char>(in), {});
    try {
        return json::poly_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed polynomial JSON: ") + e.what());
    } catch (const json::FormatError& e) {
        throw UsageError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

Rational read_lambda(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
    }
}

Prime read_prime(std::uint64_t p) {
    try {
        return Prime(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--prime: ") + e.what());
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_check(const std::string& poly_arg, std::istream& in, std::ostream& out) {
    const Poly b = read_poly(poly_arg, in);
    if (b.is_constant()) {
        emit(out, Json{{"belyi", false}, {"condition", "nonconstant"}, {"reason", "constant polynomial " + b.to_string()}});
        return kExitDomainFailure;
    }
    const auto result = certify(b);
    if (const auto* failure = std::get_if<BelyiFailure>(&result)) {
        emit(out, json::to_json(*failure));
        return kExitDomainFailure;
    }
    emit(out, Json{{"belyi", true}, {"certificate", json::to_json(std::get<BelyiCertificate>(result))}});
    return kExitOk;
}

int cmd_newton(const std::string& poly_arg, std::uint64_t prime, bool minus_one, std::istream& in, std::ostream& out) {
    const Poly f = read_poly(poly_arg, in);
    const Prime p = read_prime(prime);
    if (f.is_zero()) throw UsageError("Newton polygon of the zero polynomial");
    const NewtonPolygon polygon = newton_polygon(f, p);
    Json points = Json::array();
    for (const auto& pt : coeff_points(f, p)) points.push_back({pt.x, pt.y});
    Json j{{"prime", p.value()},
           {"polynomial", json::to_json(f)},
           {"coeff_points", points},
           {"polygon", json::to_json(polygon)},
           {"single_segment", is_single_segment(polygon)},
           {"profile", json::to_json(valuation_profile(polygon))}};
    if (minus_one) {
        if (!f.coeff(0).is_zero()) throw UsageError("--minus-one requires f(0) = 0");
        j["minus_one"] = json::to_json(minus_one_relation(f, p));
    }
    emit(out, j);
    return kExitOk;
}

int cmd_construct(const std::string& lambda, std::ostream& out) {
    try {
        emit(out, json::to_json(belyi_for_rational(read_lambda(lambda))));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return kExitOk;
}

std::string table_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("BELYI_TABLE"); env != nullptr && *env != '\0') return env;
    return kDefaultTable;
}

int cmd_height(const std::string& lambda, const std::string& table_flag, bool no_table, std::ostream& out) {
    HeightBounds bounds = [&] {
        try {
            return height(read_lambda(lambda));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    Json j = json::to_json(bounds);
    if (!no_table) {
        const std::string path = table_path(table_flag);
        append_record(path, make_record(bounds));
        j["table"] = path;
    }
    emit(out, j);
    return kExitOk;
}

int cmd_verify(const std::string& suite, const CorpusSpec& spec, std::ostream& out) {
    suites::SuiteReport report;
    try {
        report = suites::run_suite(suite, spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Json j = suites::to_json(report);
    j["corpus"] = Json{{"max_b", spec.max_b},
                       {"max_chain", spec.max_chain},
                       {"chebyshev_max_n", spec.chebyshev_max_n},
                       {"seed", spec.seed},
                       {"prime_ceiling", spec.prime_ceiling},
                       {"split_count", spec.split_count},
                       {"split_max_degree", spec.split_max_degree}};
    emit(out, j);
    return report.ok() ? kExitOk : kExitDomainFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certify, construct and analyze Belyi polynomials over Q", "belyi"};
    app.require_subcommand(1);

    std::string poly_arg;
    std::uint64_t prime = 0;
    bool minus_one = false;
    std::string lambda;
    std::string table;
    bool no_table = false;
    std::string suite;
    CorpusSpec spec;

    auto* check = app.add_subcommand("check", "Certify both Belyi conditions for a polynomial");
    check->add_option("poly", poly_arg, "Polynomial JSON {\"coeffs\": [...]}, or - to read stdin");

    auto* newton = app.add_subcommand("newton", "Newton polygon and root-valuation profile at a prime");
    newton->add_option("poly", poly_arg, "Polynomial JSON, or - to read stdin");
    newton->add_option("--prime,-p", prime, "Prime p")->required();
    newton->add_flag("--minus-one", minus_one, "Also report the relation between New_p(f) and New_p(f-1)");

    auto* construct = app.add_subcommand("construct", "Construct a Belyi polynomial sending lambda into {0,1}");
    construct->add_option("--lambda", lambda, "Rational a/b")->required()->allow_extra_args(false);

    auto* height_cmd = app.add_subcommand("height", "Bounds on the Belyi height of lambda");
    height_cmd->add_option("--lambda", lambda, "Rational a/b")->required();
    height_cmd->add_option("--table", table, "Height table to append to (default $BELYI_TABLE or ./belyi_heights.jsonl)");
    height_cmd->add_flag("--no-table", no_table, "Do not append to the height table");

    auto* verify = app.add_subcommand("verify", "Run law and theorem suites over the generated corpora");
    verify->add_option("--suite", suite, "polygon-laws | belyi-laws | theorems | oracles | all")->required();
    verify->add_option("--max-b", spec.max_b, "Largest b in the B_{a,b} generators");
    verify->add_option("--max-chain", spec.max_chain, "Longest composition chain");
    verify->add_option("--chebyshev-max-n", spec.chebyshev_max_n, "Largest Chebyshev index");
    verify->add_option("--seed", spec.seed, "Seed for randomized corpora");
    verify->add_option("--prime-ceiling", spec.prime_ceiling, "Largest prime exercised");
    verify->add_option("--split-count", spec.split_count, "Number of split polynomials");
    verify->add_option("--split-max-degree", spec.split_max_degree, "Largest split-polynomial degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*check) return cmd_check(poly_arg, in, out);
        if (*newton) return cmd_newton(poly_arg, prime, minus_one, in, out);
        if (*construct) return cmd_construct(lambda, out);
        if (*height_cmd) return cmd_height(lambda, table, no_table, out);
        if (*verify) return cmd_verify(suite, spec, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainFailure;
    }
    return kExitUsage;
}

}  // namespace belyi::cli
