#include "plunge/io.hpp"

#include <cmath>
#include <cstdio>

namespace plunge {

namespace {

nlohmann::json number_or_null(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json descriptor_json(const Spectrum& s) {
    nlohmann::json j;
    j["kind"] = to_string(s.descriptor.kind);
    j["parameter"] = s.descriptor.parameter;
    j["dimension"] = s.descriptor.dimension;
    j["volume"] = number_or_null(s.descriptor.volume);
    j["nodes"] = s.nodes;
    j["floor"] = s.floor;
    j["truncation_tail"] = s.truncation_tail;
    j["size"] = s.size();
    j["trusted_count"] = s.trusted_count();
    j["sum"] = s.values.sum();
    return j;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    out << "# " << descriptor_json(s).dump() << '\n';
    out << "index,value,trusted\n";
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        out << (i + 1) << ',' << format_number(s.values(i)) << ',' << (s.trusted(i) ? 1 : 0) << '\n';
    }
}

void write_counting_row(std::ostream& out, const CountingReport& r) {
    auto prediction = [&](const char* key) -> std::string {
        const auto it = r.predictions.find(key);
        return it == r.predictions.end() ? std::string() : format_number(it->second);
    };
    std::string karnik_ok;
    if (const auto it = r.predictions.find("karnik"); it != r.predictions.end()) {
        karnik_ok = static_cast<double>(r.Lambda) <= it->second ? "1" : "0";
    }
    out << format_number(r.c) << ',' << r.d << ',' << format_number(r.eps) << ',' << r.N_eps << ','
        << r.N_one_minus << ',' << r.N_half << ',' << r.Lambda_plus << ',' << r.Lambda_minus << ',' << r.Lambda
        << ',' << prediction("karnik") << ',' << prediction("slepian") << ',' << prediction("two_cubes_upper")
        << ',' << prediction("tiny_eps_equivalent") << ',' << karnik_ok << '\n';
}

nlohmann::json trace_report_json(const TraceReport& r) {
    return {{"trace", number_or_null(r.trace)},
            {"leading", r.leading},
            {"second", r.second},
            {"residual", number_or_null(r.residual)},
            {"trace_class_integral", number_or_null(r.trace_class_integral)},
            {"area_law_integral", number_or_null(r.area_law_integral)}};
}

void write_trace_row(std::ostream& out, double c, const TraceReport& r) {
    out << format_number(c) << ',' << format_number(r.trace) << ',' << format_number(r.leading) << ','
        << format_number(r.second) << ',' << format_number(r.residual) << ',' << format_number(r.trace_class_integral)
        << ',' << format_number(r.area_law_integral) << '\n';
}

nlohmann::json trs2_json(const nlohmann::json& descriptor, const std::string& method, double value,
                         double error_bound) {
    return {{"descriptor", descriptor}, {"method", method}, {"value", value}, {"error_bound", error_bound}};
}

}  // namespace plunge
