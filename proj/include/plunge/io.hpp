#pragma once

// Plain-text exports: CSV for sweeps, JSON for single results. Numbers are
// written with 17 significant digits so output is byte-stable and round-trips.

#include <json.hpp>
#include <ostream>
#include <string>

#include "plunge/counting.hpp"
#include "plunge/spectral1d.hpp"
#include "plunge/traces.hpp"

namespace plunge {

std::string format_number(double x);

nlohmann::json descriptor_json(const Spectrum& s);

/// "# {descriptor json}" line, then "index,value,trusted" rows (index from 1).
void write_spectrum_csv(std::ostream& out, const Spectrum& s);

inline constexpr const char* kCountingCsvHeader =
    "c,d,eps,N_eps,N_one_minus,N_half,Lambda_plus,Lambda_minus,Lambda,karnik,slepian,two_cubes_upper,"
    "tiny_eps_equivalent,karnik_ok";

/// One row per report; predictions that do not apply are left empty.
void write_counting_row(std::ostream& out, const CountingReport& r);

nlohmann::json trace_report_json(const TraceReport& r);

inline constexpr const char* kTraceCsvHeader = "c,trace,leading,second,residual,trace_class_integral,area_law_integral";
void write_trace_row(std::ostream& out, double c, const TraceReport& r);

nlohmann::json trs2_json(const nlohmann::json& descriptor, const std::string& method, double value,
                         double error_bound);

}  // namespace plunge
