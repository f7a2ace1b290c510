#include <clocale>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "koba/bounds.hpp"
#include "koba/domains_nd.hpp"
#include "koba/oracles.hpp"
#include "koba/schwarz_lab.hpp"
#include "koba/spec_io.hpp"

namespace {

using namespace koba;

constexpr int kExitParse = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitSolver = 4;

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw SpecParseError("cannot open output file '" + out_path + "'");
    out << text;
}

int run_bounds(const std::string& spec_path, const std::string& point_text,
               const std::string& dir_text, const std::string& out_path) {
    const ParsedDomain parsed = load_domain_spec_file(spec_path);
    const std::size_t dim = parsed.domain.dim();
    const CVec p = parse_point_list(point_text, dim);
    const CVec xi = parse_point_list(dir_text, dim);

    ExactOracle oracle;
    if (parsed.lens) {
        const LensMap lens = *parsed.lens;
        oracle = [lens](const CVec& zp, const CVec& zxi) {
            return lens_exact_metric(lens, zp[0], zxi[0]);
        };
    }
    const MetricBoundReport report = bound_report_nd(parsed.domain, p, xi, oracle);

    nlohmann::json doc;
    doc["domain"] = parsed.canonical;
    nlohmann::json point_echo = nlohmann::json::array();
    for (const cx& v : p) point_echo.push_back({v.real(), v.imag()});
    nlohmann::json dir_echo = nlohmann::json::array();
    for (const cx& v : xi) dir_echo.push_back({v.real(), v.imag()});
    doc["point"] = point_echo;
    doc["dir"] = dir_echo;
    doc["report"] = report_to_json(report);
    write_output(out_path, doc.dump(2) + "\n");
    return 0;
}

int run_lens(double h, double t_min, double t_max, int steps, int samples,
             const std::string& out_path) {
    const ExperimentSeries series = run_lens_experiment(h, t_min, t_max, steps, samples);
    std::ostringstream csv;
    csv << "t,d,dprime,empirical,bg_bound\n";
    for (const auto& row : series.rows)
        csv << format_sig9(row.t) << ',' << format_sig9(row.d_t) << ','
            << format_sig9(row.dprime_t) << ',' << format_sig9(row.empirical_image_dist) << ','
            << format_sig9(row.bg_bound) << '\n';
    csv << "# alpha_hat=" << format_sig9(series.fitted_alpha)
        << ",C_hat=" << format_sig9(series.fitted_C) << '\n';
    write_output(out_path, csv.str());
    return 0;
}

int run_scan(const std::string& spec_path, int grid, const std::string& out_path) {
    const ParsedDomain parsed = load_domain_spec_file(spec_path);
    if (parsed.domain.is_ball())
        throw SpecParseError("scan requires a planar domain spec");
    const ConvexRegion2D& region = parsed.domain.region();
    const BBox& box = region.bounding_box();

    std::vector<cx> points;
    for (int i = 0; i < grid; ++i) {
        const double x = box.xmin + box.width() * (i + 0.5) / grid;
        for (int j = 0; j < grid; ++j) {
            const double y = box.ymin + box.height() * (j + 0.5) / grid;
            if (region.contains({x, y})) points.push_back({x, y});
        }
    }

    std::vector<MetricBoundReport> reports(points.size());
    std::mutex failure_mutex;
    std::exception_ptr failure = nullptr;
    kernels::apply(points.size(), [&](std::size_t i) {
        try {
            reports[i] = bound_report_nd(parsed.domain, {points[i]}, {cx{1.0, 0.0}});
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);

    std::ostringstream csv;
    csv << "x,y,regime,improved_upper,graham_upper\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        csv << format_sig9(points[i].real()) << ',' << format_sig9(points[i].imag()) << ','
            << regime_name(reports[i].regime) << ',' << format_sig9(reports[i].improved_upper)
            << ',' << format_sig9(reports[i].graham_upper) << '\n';
    write_output(out_path, csv.str());
    return 0;
}

int run_validate() {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
        if (!ok) ++failures;
    };

    {
        bool ok = true;
        const auto domain = DomainND::planar(ConvexRegion2D::disk({0.0, 0.0}, 1.0));
        for (int i = 1; i <= 9; ++i) {
            const double p = 0.1 * i;
            const auto report = bound_report_nd(domain, {cx{p, 0.0}}, {cx{1.0, 0.0}});
            ok = ok && std::abs(report.improved_upper - 1.0 / (1.0 - p * p)) <= 1e-9;
        }
        check("disk pipeline reproduces the Poincare metric", ok);
    }
    {
        bool ok = true;
        std::mt19937 rng(4207);
        std::uniform_real_distribution<double> uni(-0.75, 0.75);
        const auto ball = DomainND::ball({cx{0.0, 0.0}, cx{0.0, 0.0}}, 1.0);
        for (int i = 0; i < 200; ++i) {
            CVec x{cx{uni(rng), uni(rng)}, cx{uni(rng), uni(rng)}};
            if (norm(x) > 0.95) continue;
            const auto report = bound_report_nd(ball, x, {cx{1.0, 0.0}, cx{0.0, 0.0}});
            ok = ok && report.exact && std::abs(report.improved_upper - *report.exact) <= 1e-8;
        }
        check("ball pipeline matches the exact ball metric", ok);
    }
    {
        bool ok = true;
        const auto lens = lens_params(0.5);
        const auto domain = DomainND::planar(lens.region);
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> ux(-0.8, 0.8), uy(-0.45, 0.45);
        int used = 0;
        for (int i = 0; used < 50 && i < 2000; ++i) {
            const cx z{ux(rng), uy(rng)};
            if (lens.region.signed_margin(z) < 1e-3) continue;
            ++used;
            const double exact = lens_exact_metric(lens.map, z, 1.0);
            const auto report = bound_report_nd(domain, {z}, {cx{1.0, 0.0}});
            ok = ok && report.graham_lower <= exact + 1e-6 &&
                 exact <= report.improved_upper + 1e-6 &&
                 report.improved_upper <= report.graham_upper + 1e-12;
        }
        check("lens oracle sits inside the bound sandwich", ok);
    }
    {
        bool ok = true;
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            const double dp = 0.1 + 0.9 * uni(rng);
            const double dz = dp + 0.05 + uni(rng);
            const double ad = uni(rng) * 0.95 * dz;
            const auto [t_star, value] = phi_zeta_min(dp, dz, ad);
            double grid_best = 1.0 / dp;
            for (int k = 0; k <= 10000; ++k) {
                const double t = static_cast<double>(k) / 10000.0;
                const double rt = (1.0 - t) * dp + t * dz;
                const double denom = rt * rt - t * t * ad * ad;
                if (denom > 0.0) grid_best = std::min(grid_best, rt / denom);
            }
            ok = ok && std::abs(value - grid_best) <= 1e-5 && value < 1.0 / dp && t_star > 0.0 &&
                 t_star <= 1.0;
        }
        check("closed-form objective minimum matches grid search", ok);
    }
    {
        bool ok = true;
        std::mt19937 rng(12);
        std::uniform_real_distribution<double> uni(-0.9, 0.9);
        for (int i = 0; i < 500; ++i) {
            const cx z{uni(rng) * 0.5, uni(rng) * 0.5};
            const cx w{uni(rng) * 0.5, uni(rng) * 0.5};
            const double dist = disk_distance(z, w);
            ok = ok && kob_dist_lower(1.0 - std::abs(z), 1.0 - std::abs(w)) <= dist + 1e-12;
            ok = ok && dist <= kob_dist_upper_compact({z}, {w}, 0.5) + 1e-12;
        }
        check("distance bounds dominate and are dominated as expected", ok);
    }
    {
        bool ok = true;
        for (const auto& sample : regime_scan_example23(12))
            ok = ok && sample.regime == Regime::Case3;
        check("cone scan classifies the whole window as Case3", ok);
    }
    {
        const double g3 = lambda_alpha_gap_scan(2.0, 300, 1.0 - 1e-3).max_gap;
        const double g6 = lambda_alpha_gap_scan(2.0, 300, 1.0 - 1e-6).max_gap;
        check("model-domain distance gap stays bounded toward the boundary", g6 - g3 < 1.0);
    }

    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_NUMERIC, "C");

    CLI::App app{"rigorous bounds for the Kobayashi metric on bounded convex domains"};
    app.require_subcommand(1);

    std::string spec_path, point_text, dir_text, out_path;
    double h = 0.5, t_min = 1e-4, t_max = 1e-2;
    int steps = 20, samples = 10000, grid = 50;

    auto* bounds_cmd = app.add_subcommand("bounds", "bound report at a point and direction");
    bounds_cmd->add_option("--spec", spec_path, "domain spec file")->required();
    bounds_cmd->add_option("--point", point_text, "base point, comma-separated reals")->required();
    bounds_cmd->add_option("--dir", dir_text, "direction, comma-separated reals")->required();
    bounds_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* lens_cmd = app.add_subcommand("lens", "lens decay experiment CSV");
    lens_cmd->set_help_flag("--help", "print help");  // frees --h for the lens parameter
    lens_cmd->add_option("--h", h, "lens parameter in (0, 1)")->required();
    lens_cmd->add_option("--tmin", t_min, "smallest vertex offset")->required();
    lens_cmd->add_option("--tmax", t_max, "largest vertex offset")->required();
    lens_cmd->add_option("--steps", steps, "log-spaced offsets");
    lens_cmd->add_option("--samples", samples, "boundary samples per offset");
    lens_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* scan_cmd = app.add_subcommand("scan", "regime scan CSV over a planar domain");
    scan_cmd->add_option("--spec", spec_path, "domain spec file")->required();
    scan_cmd->add_option("--grid", grid, "grid resolution");
    scan_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* validate_cmd = app.add_subcommand("validate", "run the oracle self-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (bounds_cmd->parsed()) return run_bounds(spec_path, point_text, dir_text, out_path);
        if (lens_cmd->parsed()) return run_lens(h, t_min, t_max, steps, samples, out_path);
        if (scan_cmd->parsed()) return run_scan(spec_path, grid, out_path);
        if (validate_cmd->parsed()) return run_validate();
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const InvalidRegion& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const NotInterior& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGeometry;
    } catch (const ZeroDirection& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGeometry;
    } catch (const EmptyErosion& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGeometry;
    } catch (const BranchViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGeometry;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
    return 0;
}
