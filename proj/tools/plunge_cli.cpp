// Command-line front end. Every command writes plot-ready CSV or JSON to
// stdout (or --output) and is deterministic for a given set of flags.
//
// Exit status: 0 success, 1 numeric failure or failed check, 2 usage error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "plunge/acceptance.hpp"
#include "plunge/counting.hpp"
#include "plunge/errors.hpp"
#include "plunge/geometry.hpp"
#include "plunge/io.hpp"
#include "plunge/spectral1d.hpp"
#include "plunge/trace_squared.hpp"
#include "plunge/traces.hpp"
#include "plunge/whitney.hpp"

using namespace plunge;
using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void add_output(CLI::App* cmd, std::string& path) {
    cmd->add_option("-o,--output", path, "Write to this file instead of stdout");
}

Spectrum spectrum_for(const std::string& op, double c, Eigen::Index nodes, int d, double floor_override = 0.0) {
    Spectrum base;
    if (op == "localization") {
        base = nodes > 0 ? localization_spectrum(c, nodes) : localization_spectrum(c);
    } else if (op == "jr") {
        base = jr_singular_values(c, nodes > 0 ? nodes : std::max<Eigen::Index>(200, static_cast<Eigen::Index>(40 * c)));
    } else if (op == "ir") {
        base = ir_singular_values(c, nodes > 0 ? nodes : required_nodes(c));
    } else {
        throw UsageError("unknown operator '" + op + "'");
    }
    if (floor_override > 0) base.floor = floor_override;
    if (d == 1) return base;
    return product_spectrum(base, d, default_product_floor(base));
}

SpectralFunction parse_function(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const bool has_arg = colon != std::string::npos;
    auto argument = [&]() {
        if (!has_arg) throw UsageError("function '" + name + "' needs an argument, e.g. " + name + ":0.5");
        return std::stod(spec.substr(colon + 1));
    };
    if (name == "entropy") return functions::entropy();
    if (name == "identity") return functions::identity();
    if (name == "square") return functions::square();
    if (name == "indicator") return functions::indicator_above(argument());
    if (name == "invlog") return functions::inverse_log_power(argument());
    throw UsageError("unknown function '" + spec + "'");
}

Region region_for(const std::string& shape, const std::string& boxes_path) {
    if (!boxes_path.empty()) {
        std::ifstream in(boxes_path);
        if (!in) throw UsageError("cannot open box file '" + boxes_path + "'");
        return box_union_sdf(parse_box_union(in));
    }
    if (shape == "interval") return box_region(AxisBox{Interval(0, 1)});
    if (shape == "square") return box_region(AxisBox::cube(2, 0, 1));
    if (shape == "cube") return box_region(AxisBox::cube(3, 0, 1));
    if (shape == "disk") return ball_region(Point::Zero(2), 1.0);
    if (shape == "L") return box_union_sdf(parse_box_union("0,1;0,2\n1,2;0,1\n"));
    throw UsageError("unknown shape '" + shape + "'");
}

BoxUnion read_union(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open box file '" + path + "'");
    return parse_box_union(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra, plunge counts and trace functionals of time-frequency localization operators"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every command");
    app.set_config("--config", "",
                   "key=value file; keys are 'command.flag', e.g. 'counting.c=10,20' (command-line flags win)");
    app.fallthrough();

    std::string output;

    // spectrum
    auto* spectrum = app.add_subcommand(
        "spectrum",
        "Eigenvalues (or singular values) of one operator.\n"
        "Output: '# {descriptor json}' line, then CSV columns index,value,trusted\n"
        "  index    1-based position in the descending sequence\n"
        "  value    eigenvalue / singular value\n"
        "  trusted  1 if value >= the numerical floor");
    double sp_c = 10.0;
    Eigen::Index sp_nodes = 0;
    int sp_d = 1;
    std::string sp_op = "localization";
    spectrum->add_option("--c", sp_c, "Product |A||B| (or r for jr/ir)")->check(CLI::PositiveNumber);
    spectrum->add_option("--nodes", sp_nodes, "Quadrature nodes (default: max(64, ceil(4c)+60))");
    spectrum->add_option("--operator", sp_op, "localization | jr | ir")->check(CLI::IsMember({"localization", "jr", "ir"}));
    spectrum->add_option("--d", sp_d, "Dimension (tensor power of the 1-D spectrum)")->check(CLI::Range(1, 4));
    double floor_override = 0.0;
    spectrum->add_option("--floor", floor_override, "Trust threshold for values (default 1e-13 for spectra, 1e-7 for jr)");
    add_output(spectrum, output);

    // counting
    auto* counting = app.add_subcommand(
        "counting",
        "Counting functions over a (c, eps) grid.\n"
        "Output CSV columns: c,d,eps,N_eps,N_one_minus,N_half,Lambda_plus,Lambda_minus,Lambda,\n"
        "  karnik,slepian,two_cubes_upper,tiny_eps_equivalent,karnik_ok\n"
        "  N_x = #{lambda > x}; Lambda_plus = #{1/2 < lambda <= 1-eps}; Lambda_minus = #{eps < lambda <= 1/2}\n"
        "  prediction columns are empty where they do not apply; karnik_ok = Lambda <= karnik (d = 1)");
    std::vector<double> ct_c{10.0}, ct_eps{1e-2};
    int ct_d = 1;
    counting->add_option("--c", ct_c, "Comma-separated list of c")->delimiter(',')->check(CLI::PositiveNumber);
    counting->add_option("--eps", ct_eps, "Comma-separated thresholds in (0, 1/2)")->delimiter(',');
    counting->add_option("--d", ct_d, "Dimension")->check(CLI::Range(1, 4));
    counting->add_option("--floor", floor_override, "Trust threshold; eps must exceed it (default 1e-13)");
    add_output(counting, output);

    // bounds-check
    auto* bounds = app.add_subcommand(
        "bounds-check",
        "Checks the Karnik, Slepian and tensor-sandwich bounds over a grid of c.\n"
        "Output CSV columns: check,c,parameter,value,bound,ok\n"
        "  karnik:   value = Lambda_eps, bound = Karnik bound, parameter = eps\n"
        "  slepian:  value = |N_a - prediction|, bound = 3 + log c, parameter = a\n"
        "  sandwich: value = N_a(product), bound = upper count, parameter = a (d = 2)");
    std::vector<double> bc_c{5.0, 10.0, 20.0, 40.0};
    bounds->add_option("--c", bc_c, "Comma-separated list of c")->delimiter(',')->check(CLI::PositiveNumber);
    add_output(bounds, output);

    // trace
    auto* trace = app.add_subcommand(
        "trace",
        "Tr f(S) for S on [0,c]^d x [0,1]^d against the two-term prediction.\n"
        "Output: JSON {trace, leading, second, residual, trace_class_integral, area_law_integral}\n"
        "  for a single c; with several c or --format csv the CSV columns\n"
        "  c,trace,leading,second,residual,trace_class_integral,area_law_integral");
    std::vector<double> tr_c{10.0};
    std::string tr_f = "entropy", tr_format = "json";
    int tr_d = 1;
    trace->add_option("--c", tr_c, "Comma-separated list of c")->delimiter(',')->check(CLI::PositiveNumber);
    trace->add_option("--f", tr_f, "entropy | identity | square | indicator:a | invlog:alpha");
    trace->add_option("--d", tr_d, "Dimension")->check(CLI::Range(1, 3));
    trace->add_option("--format", tr_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    add_output(trace, output);

    // trs2
    auto* trs2 = app.add_subcommand(
        "trs2",
        "Tr S^2 for [0,c] x [0,1] or for two box unions (--a-boxes/--b-boxes).\n"
        "Output: JSON {descriptor, method, value, error_bound}; with --method all a JSON object\n"
        "  holding one entry per method plus max_pairwise_gap");
    double t2_c = 10.0;
    int t2_terms = 3;
    std::string t2_method = "all", t2_a, t2_b;
    trs2->add_option("--c", t2_c, "Interval length c")->check(CLI::PositiveNumber);
    trs2->add_option("--method", t2_method, "explicit | w-integral | nystrom | asymptotic | all")
        ->check(CLI::IsMember({"explicit", "w-integral", "nystrom", "asymptotic", "all"}));
    trs2->add_option("--terms", t2_terms, "Terms N of the asymptotic series")->check(CLI::Range(0, 20));
    trs2->add_option("--a-boxes", t2_a, "Box file for A (lines 'lo1,hi1;lo2,hi2;...')");
    trs2->add_option("--b-boxes", t2_b, "Box file for B");
    add_output(trs2, output);

    // whitney
    auto* whitney = app.add_subcommand(
        "whitney",
        "Whitney decomposition of a region.\n"
        "Output CSV columns: level,x1,...,xd,side,certified_dist\n"
        "  interior cubes first, then boundary cells at the cutoff level;\n"
        "  x = cube centre, side = 2^-level, certified_dist = lower bound on dist to the complement\n"
        "  with --census: level,count,fitted (count * 2^{-(d-1) level})");
    std::string wh_shape = "square", wh_boxes;
    int wh_cutoff = 6;
    bool wh_census = false;
    whitney->add_option("--shape", wh_shape, "interval | square | cube | disk | L");
    whitney->add_option("--boxes", wh_boxes, "Box file (overrides --shape)");
    whitney->add_option("--cutoff", wh_cutoff, "Cutoff level D");
    whitney->add_flag("--census", wh_census, "Emit the shell census instead of the cubes");
    add_output(whitney, output);

    // minkowski
    auto* minkowski = app.add_subcommand(
        "minkowski",
        "Grid estimate of the boundary content |{|sdf| < r}| / 2r and the boundary cover.\n"
        "Output CSV columns: r,content,cover,cover_scaled\n"
        "  cover = number of r-grid cells near the boundary, cover_scaled = cover * r^(d-1)");
    std::string mk_shape = "disk", mk_boxes;
    std::vector<double> mk_radii{1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
    double mk_step = 0.25;
    minkowski->add_option("--shape", mk_shape, "interval | square | cube | disk | L");
    minkowski->add_option("--boxes", mk_boxes, "Box file (overrides --shape)");
    minkowski->add_option("--radii", mk_radii, "Decreasing radii")->delimiter(',')->check(CLI::PositiveNumber);
    minkowski->add_option("--step-factor", mk_step, "Grid step as a fraction of r (<= 1/4)");
    add_output(minkowski, output);

    // verify-all
    auto* verify = app.add_subcommand(
        "verify-all",
        "Runs the full verification suite.\n"
        "Output: one line per check, 'PASS|FAIL [id] name measured=.. limit=.. detail (time)'");
    add_output(verify, output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Output out(output);
        std::ostream& os = out.stream();

        if (*spectrum) {
            write_spectrum_csv(os, spectrum_for(sp_op, sp_c, sp_nodes, sp_d, floor_override));
        } else if (*counting) {
            os << kCountingCsvHeader << '\n';
            for (double c : ct_c) {
                const auto s = spectrum_for("localization", c, 0, ct_d, floor_override);
                for (double eps : ct_eps) write_counting_row(os, plunge_counts(s, eps));
            }
        } else if (*bounds) {
            bool all_ok = true;
            os << "check,c,parameter,value,bound,ok\n";
            auto row = [&](const char* check, double c, double param, double value, double bound) {
                const bool ok = value <= bound;
                all_ok = all_ok && ok;
                os << check << ',' << format_number(c) << ',' << format_number(param) << ',' << format_number(value)
                   << ',' << format_number(bound) << ',' << (ok ? 1 : 0) << '\n';
            };
            for (double c : bc_c) {
                const auto s = localization_spectrum(c);
                for (int e = 1; e <= 8; ++e) {
                    const double eps = std::pow(10.0, -e);
                    if (!(eps > s.floor)) continue;
                    row("karnik", c, eps, static_cast<double>(plunge_counts(s, eps).Lambda), karnik_bound(c, eps));
                }
                if (c > 1) {
                    for (double a : {0.2, 0.5, 0.8}) {
                        const double gap = std::abs(static_cast<double>(count_above(s, a)) - slepian_prediction(c, a));
                        row("slepian", c, a, gap, 3.0 + std::log(c));
                    }
                }
                for (double a : {0.3, 0.5, 0.7}) {
                    const auto sw = sandwich_check(s, 2, a);
                    row("sandwich_lower", c, a, static_cast<double>(sw.lower), static_cast<double>(sw.middle));
                    row("sandwich_upper", c, a, static_cast<double>(sw.middle), static_cast<double>(sw.upper));
                }
            }
            return all_ok ? 0 : 1;
        } else if (*trace) {
            const auto f = parse_function(tr_f);
            const auto unit = BoxUnion::from_disjoint({AxisBox::cube(tr_d, 0, 1)});
            const bool csv = tr_format == "csv" || tr_c.size() > 1;
            if (csv) os << kTraceCsvHeader << '\n';
            for (double c : tr_c) {
                const auto s = spectrum_for("localization", c, 0, tr_d);
                const auto report = two_term_prediction(f, unit, unit, c, trace_function(s, f).value);
                if (csv) {
                    write_trace_row(os, c, report);
                } else {
                    os << trace_report_json(report).dump(2) << '\n';
                }
            }
        } else if (*trs2) {
            if (!t2_a.empty() || !t2_b.empty()) {
                if (t2_a.empty() || t2_b.empty()) throw UsageError("trs2: give both --a-boxes and --b-boxes");
                if (t2_method != "w-integral" && t2_method != "all") {
                    throw UsageError("trs2: box unions support only the w-integral method");
                }
                const auto v = trs2_box_union(read_union(t2_a), read_union(t2_b));
                os << trs2_json({{"a", t2_a}, {"b", t2_b}}, "w-integral", v.value, v.abs_error_bound).dump(2) << '\n';
            } else {
                const json desc = {{"c", t2_c}};
                json results = json::object();
                std::vector<double> values;
                auto want = [&](const char* m) { return t2_method == "all" || t2_method == m; };
                if (want("explicit")) {
                    const double v = trs2_interval_explicit(t2_c);
                    results["explicit"] = trs2_json(desc, "explicit", v, 1e-12 * std::max(1.0, v));
                    values.push_back(v);
                }
                if (want("w-integral")) {
                    const auto v = trs2_box_union(BoxUnion::from_disjoint({AxisBox{Interval(0, t2_c)}}),
                                                  BoxUnion::from_disjoint({AxisBox{Interval(0, 1)}}));
                    results["w-integral"] = trs2_json(desc, "w-integral", v.value, v.abs_error_bound);
                    values.push_back(v.value);
                }
                if (want("nystrom")) {
                    const auto s = localization_spectrum(t2_c);
                    const double v = s.values.squaredNorm();
                    results["nystrom"] = trs2_json(desc, "nystrom", v, 2.0 * static_cast<double>(s.size()) * s.floor);
                    values.push_back(v);
                }
                if (want("asymptotic")) {
                    const double v = trs2_asymptotic(t2_c, t2_terms);
                    results["asymptotic"] = trs2_json(desc, "asymptotic", v, trs2_asymptotic_next_term(t2_c, t2_terms));
                    if (t2_method == "asymptotic") values.push_back(v);
                }
                if (t2_method == "all") {
                    double gap = 0.0;
                    for (double a : values) {
                        for (double b : values) gap = std::max(gap, std::abs(a - b));
                    }
                    results["max_pairwise_gap"] = gap;
                    os << results.dump(2) << '\n';
                } else {
                    os << results.begin().value().dump(2) << '\n';
                }
            }
        } else if (*whitney) {
            const auto region = region_for(wh_shape, wh_boxes);
            const auto w = whitney_decompose(region, wh_cutoff);
            if (wh_census) {
                const auto census = shell_census(w);
                os << "level,count,fitted\n";
                for (const auto& [level, count] : census.counts) {
                    os << level << ',' << count << ',' << format_number(census.fitted.at(level)) << '\n';
                }
            } else {
                write_whitney_csv(os, w);
            }
        } else if (*minkowski) {
            const auto region = region_for(mk_shape, mk_boxes);
            const auto profile = minkowski_profile(region, mk_radii, mk_step);
            os << "r,content,cover,cover_scaled\n";
            for (const auto& sample : profile) {
                const auto cover = boundary_cover(region, sample.r);
                os << format_number(sample.r) << ',' << format_number(sample.content) << ',' << cover << ','
                   << format_number(static_cast<double>(cover) * std::pow(sample.r, region.dimension - 1)) << '\n';
            }
        } else if (*verify) {
            bool all_ok = true;
            acceptance::run_all([&](const acceptance::CheckResult& r) {
                all_ok = all_ok && r.passed;
                os << acceptance::format_line(r) << std::endl;
            });
            return all_ok ? 0 : 1;
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 1;
    }
}
