#include <doctest.h>

#include <sstream>

#include "plunge/io.hpp"

using namespace plunge;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::size_t fields(const std::string& row) { return static_cast<std::size_t>(std::count(row.begin(), row.end(), ',')) + 1; }

}  // namespace

TEST_CASE("number formatting round-trips") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_number(M_PI)) == M_PI);
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("spectrum CSV") {
    const auto s = localization_spectrum(3.0);
    std::ostringstream out;
    write_spectrum_csv(out, s);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == static_cast<std::size_t>(s.size()) + 2);
    REQUIRE(rows[0].rfind("# ", 0) == 0);
    const auto header = nlohmann::json::parse(rows[0].substr(2));
    CHECK(header["kind"] == "localization_1d");
    CHECK(header["parameter"].get<double>() == 3.0);
    CHECK(header["nodes"].get<long>() == s.nodes);
    CHECK(header["sum"].get<double>() == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(rows[1] == "index,value,trusted");
    CHECK(rows[2].rfind("1,", 0) == 0);
    CHECK(std::stod(rows[2].substr(2)) == s.values(0));
    CHECK(rows[2].back() == '1');
    CHECK(rows.back().back() == '0');
}

TEST_CASE("counting row lines up with the header") {
    const auto s = localization_spectrum(8.0);
    const auto r = plunge_counts(s, 1e-3);
    std::ostringstream out;
    write_counting_row(out, r);
    const auto row = lines(out.str()).at(0);
    CHECK(fields(row) == fields(kCountingCsvHeader));
    CHECK(row.rfind("8,1,0.001,", 0) == 0);
    CHECK(row.back() == '1');
}

TEST_CASE("trace JSON and CSV") {
    const auto a = BoxUnion::from_disjoint({AxisBox{Interval(0, 1)}});
    const double c = 6.0;
    const auto s = localization_spectrum(c);
    const auto r = two_term_prediction(functions::entropy(), a, a, c, trace_function(s, functions::entropy()).value);
    const auto j = trace_report_json(r);
    for (const char* key : {"trace", "leading", "second", "residual", "trace_class_integral", "area_law_integral"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["trace"].get<double>() == r.trace);
    std::ostringstream out;
    write_trace_row(out, c, r);
    CHECK(fields(lines(out.str()).at(0)) == fields(kTraceCsvHeader));

    TraceReport missing;
    CHECK(trace_report_json(missing)["trace"].is_null());
}

TEST_CASE("trs2 JSON") {
    const auto j = trs2_json({{"c", 2.0}}, "explicit", 1.5, 1e-12);
    CHECK(j["method"] == "explicit");
    CHECK(j["value"].get<double>() == 1.5);
    CHECK(j["error_bound"].get<double>() == 1e-12);
    CHECK(j["descriptor"]["c"].get<double>() == 2.0);
}
