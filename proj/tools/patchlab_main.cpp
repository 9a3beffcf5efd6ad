// patchlab command-line front end: synthesis, analysis, far-field patterns,
// S11/VSWR sweeps, design-space search, stored presets and comparison reports.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "patchlab/patchlab.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read file: " + path);
    }
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open file for writing: " + path);
    }
    out << content;
    if (!out) {
        throw IoError("cannot write file: " + path);
    }
}

nlohmann::json parse_json_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

patchlab::DesignResult paper_preset_design() {
    using namespace patchlab;
    const Substrate substrate = presets::paper_substrate();
    return DesignResult{presets::paper_proposed_geometry(),
                        effective_permittivity(substrate, 8.6e-3),
                        substrate,
                        presets::kPaperF0,
                        presets::kPaperProposedGroundSide,
                        fractional_bandwidth(substrate, presets::kPaperF0)};
}

patchlab::DesignResult load_design(const std::string& design_path, bool use_paper_preset) {
    if (use_paper_preset) {
        return paper_preset_design();
    }
    return patchlab::io::design_from_json(parse_json_file(design_path));
}

std::string report_table(const patchlab::ReportDoc& doc) {
    using patchlab::io::format_double;
    auto metric_value = [](const patchlab::MetricSet& m, const std::string& name) {
        if (name == "return_loss") return m.return_loss_db;
        if (name == "vswr") return m.vswr;
        if (name == "gain") return m.gain_dbi;
        if (name == "patch_area") return m.patch_area_mm2;
        if (name == "bandwidth") return m.bandwidth_hz;
        if (name == "ground_area") return m.ground_area_mm2;
        return m.freq_offset_hz;
    };
    auto percent2 = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };
    std::ostringstream out;
    out << "metric            benchmark       proposed        improvement\n";
    for (const auto& [name, imp] : doc.improvements) {
        std::string leftpad(name.size() < 18 ? 18 - name.size() : 1, ' ');
        std::string bench = format_double(metric_value(doc.benchmark, name));
        std::string prop = format_double(metric_value(doc.proposed, name));
        out << name << leftpad;
        out << bench << std::string(bench.size() < 16 ? 16 - bench.size() : 1, ' ');
        out << prop << std::string(prop.size() < 16 ? 16 - prop.size() : 1, ' ');
        out << percent2(imp.percent) << "%";
        if (!imp.note.empty()) {
            out << " (" << imp.note << ")";
        }
        out << " [" << patchlab::io::to_string(imp.convention) << "]\n";
    }
    return out.str();
}

int run(int argc, char** argv) {
    using namespace patchlab;

    CLI::App app{"patchlab: rectangular microstrip patch antenna design toolkit"};
    app.require_subcommand(1);

    // --- synth -------------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "Synthesize a patch for a target resonance");
    double synth_f0_ghz = 0.0, synth_eps_r = 0.0, synth_h_mm = 0.0, synth_t_mm = 0.0;
    std::optional<double> synth_tan_delta;
    std::string synth_out;
    synth->add_option("--f0-ghz", synth_f0_ghz, "Target resonance (GHz)")->required();
    synth->add_option("--eps-r", synth_eps_r, "Substrate relative permittivity")->required();
    synth->add_option("--h-mm", synth_h_mm, "Substrate height (mm)")->required();
    synth->add_option("--t-mm", synth_t_mm, "Conductor thickness (mm)");
    synth->add_option("--tan-delta", synth_tan_delta, "Substrate loss tangent");
    synth->add_option("-o,--output", synth_out, "Write design JSON to file");

    // --- analyze -----------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "Analyze a design document back to resonance");
    std::string analyze_design, analyze_out;
    double analyze_z0 = 50.0;
    analyze->add_option("--design", analyze_design, "Design JSON file")->required();
    analyze->add_option("--z0", analyze_z0, "Reference impedance (ohm)");
    analyze->add_option("-o,--output", analyze_out, "Write analysis JSON to file");

    // --- pattern -----------------------------------------------------------
    auto* pattern = app.add_subcommand("pattern", "Far-field cuts or hemisphere grid");
    std::string pattern_design, pattern_preset, pattern_cut, pattern_csv_path, pattern_svg_path;
    bool pattern_grid = false;
    double pattern_step_deg = 1.0;
    pattern->add_option("--design", pattern_design, "Design JSON file");
    pattern->add_option("--preset", pattern_preset, "Use a stored design (paper)")
        ->check(CLI::IsMember({"paper"}));
    pattern->add_option("--cut", pattern_cut, "Principal cut: E or H")
        ->check(CLI::IsMember({"E", "H"}));
    pattern->add_flag("--grid", pattern_grid, "Emit the full hemisphere grid");
    pattern->add_option("--step-deg", pattern_step_deg, "Angular step (degrees)");
    pattern->add_option("--csv", pattern_csv_path, "Write CSV to file (default stdout)");
    pattern->add_option("--svg", pattern_svg_path, "Render a polar SVG of the cut");

    // --- sweep -------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "Surrogate S11/VSWR frequency sweep");
    std::string sweep_design, sweep_preset, sweep_csv_path;
    double sweep_f0_ghz = 0.0, sweep_bw = 0.0, sweep_r_res = 0.0, sweep_z0 = 50.0;
    double sweep_from_ghz = 0.0, sweep_to_ghz = 0.0;
    int sweep_points = 201;
    sweep->add_option("--design", sweep_design, "Design JSON file");
    sweep->add_option("--preset", sweep_preset, "Use a stored design (paper)")
        ->check(CLI::IsMember({"paper"}));
    sweep->add_option("--f0-ghz", sweep_f0_ghz, "Resonance (GHz), with --fractional-bw");
    sweep->add_option("--fractional-bw", sweep_bw, "VSWR<=2 fractional bandwidth target");
    sweep->add_option("--r-res", sweep_r_res, "Resonant resistance (ohm); default z0");
    sweep->add_option("--z0", sweep_z0, "Reference impedance (ohm)");
    sweep->add_option("--from-ghz", sweep_from_ghz, "Sweep start (GHz)");
    sweep->add_option("--to-ghz", sweep_to_ghz, "Sweep stop (GHz)");
    sweep->add_option("--points", sweep_points, "Number of sweep points");
    sweep->add_option("--csv", sweep_csv_path, "Write CSV to file (default stdout)");

    // --- explore -----------------------------------------------------------
    auto* explore = app.add_subcommand("explore", "Rank a small design space");
    std::string explore_space, explore_csv_path;
    double explore_w_bw = 1.0, explore_w_area = 0.0;
    int explore_n_h = 8;
    explore->add_option("--space", explore_space, "Search-space JSON file")->required();
    explore->add_option("--w-bw", explore_w_bw, "Bandwidth weight");
    explore->add_option("--w-area", explore_w_area, "Footprint weight");
    explore->add_option("--n-h", explore_n_h, "Height grid size");
    explore->add_option("--csv", explore_csv_path, "Write CSV to file (default stdout)");

    // --- report ------------------------------------------------------------
    auto* report = app.add_subcommand("report", "Two-design comparison report");
    std::string report_benchmark, report_proposed, report_out, report_format = "json";
    std::string report_preset;
    bool report_no_meta = false;
    auto* report_preset_opt =
        report->add_option("--preset", report_preset, "Use stored metric sets (paper)")
            ->check(CLI::IsMember({"paper"}));
    report->add_option("--benchmark", report_benchmark, "Benchmark metrics JSON")
        ->excludes(report_preset_opt);
    report->add_option("--proposed", report_proposed, "Proposed metrics JSON")
        ->excludes(report_preset_opt);
    report->add_option("--format", report_format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    report->add_flag("--no-meta", report_no_meta, "Omit tool metadata for diff-stable output");
    report->add_option("-o,--output", report_out, "Write report to file");

    // --- preset ------------------------------------------------------------
    auto* preset = app.add_subcommand("preset", "Emit the stored paper-proposed geometry");
    std::string preset_name = "paper-proposed", preset_out;
    preset->add_option("--name", preset_name, "Preset name")
        ->check(CLI::IsMember({"paper-proposed"}));
    preset->add_option("-o,--output", preset_out, "Write design JSON to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitValidation;
    }

    try {
        if (synth->parsed()) {
            Substrate substrate(synth_eps_r, synth_h_mm * 1e-3, synth_tan_delta);
            DesignResult design = synthesize(synth_f0_ghz * 1e9, substrate);
            if (synth_t_mm > 0.0) {
                design.geometry = PatchGeometry(design.geometry.l, design.geometry.w,
                                                synth_t_mm * 1e-3, design.geometry.delta_l,
                                                design.geometry.l_eff);
            }
            write_output(synth_out, dump(io::design_to_json(design)));
        } else if (analyze->parsed()) {
            const DesignResult design = load_design(analyze_design, false);
            const double eps_eff = effective_permittivity(design.substrate, design.geometry.w);
            const double f0 = resonant_frequency(design.geometry, design.substrate,
                                                 ModeIndex(1, 0));
            const double bw = fractional_bandwidth(design.substrate, f0);
            const ResonatorModel model = calibrate_model(f0, bw, analyze_z0, analyze_z0);
            const BandReport band = extract_band(model, BandCriterion::vswr2);
            nlohmann::json j{
                {"schema", "patchlab/analysis-v1"},
                {"f0_hz", f0},
                {"derived", {{"f0_ghz", f0 / 1e9}}},
                {"eps_eff", eps_eff},
                {"fractional_bandwidth", bw},
                {"band",
                 {{"criterion", "vswr2"},
                  {"f_low_hz", band.f_low},
                  {"f_high_hz", band.f_high},
                  {"bandwidth_hz", band.bandwidth}}},
                {"w_over_l", design.geometry.w / design.geometry.l},
                {"ground_side_m", design.ground_side},
            };
            write_output(analyze_out, dump(j));
        } else if (pattern->parsed()) {
            const bool use_preset = !pattern_preset.empty();
            if (use_preset == !pattern_design.empty()) {
                throw std::invalid_argument("pattern: give exactly one of --design or --preset");
            }
            if (pattern_grid == !pattern_cut.empty()) {
                throw std::invalid_argument("pattern: give exactly one of --cut or --grid");
            }
            const DesignResult design = load_design(pattern_design, use_preset);
            const double k0 = make_operating_point(design.f0).k0;
            const double step = deg_to_rad(pattern_step_deg);
            if (pattern_grid) {
                if (!pattern_svg_path.empty()) {
                    throw std::invalid_argument("pattern: SVG rendering needs a --cut");
                }
                if (!(pattern_step_deg > 0.0)) {
                    throw std::invalid_argument("pattern: step must be positive");
                }
                // Hemisphere grid, normalized to the global peak.
                std::vector<PatternSample> samples;
                const int n_theta = static_cast<int>(std::lround(90.0 / pattern_step_deg));
                const int n_phi = static_cast<int>(std::lround(360.0 / pattern_step_deg));
                if (std::abs(n_theta * pattern_step_deg - 90.0) > 1e-9 ||
                    std::abs(n_phi * pattern_step_deg - 360.0) > 1e-9 || n_theta < 1) {
                    throw std::invalid_argument("pattern: step must divide the grid ranges");
                }
                double peak = 0.0;
                std::vector<double> raw;
                for (int i = 0; i <= n_theta; ++i) {
                    for (int j = 0; j < n_phi; ++j) {
                        const double v =
                            field_pattern(i * step, j * step, design.geometry,
                                          design.substrate, k0);
                        raw.push_back(v);
                        peak = std::max(peak, v);
                    }
                }
                std::size_t idx = 0;
                for (int i = 0; i <= n_theta; ++i) {
                    for (int j = 0; j < n_phi; ++j) {
                        const double value = peak > 0.0 ? raw[idx] / peak : 0.0;
                        samples.push_back(PatternSample{
                            i * step, j * step, value,
                            amplitude_db(value, kPatternDbFloor)});
                        ++idx;
                    }
                }
                write_output(pattern_csv_path, io::pattern_csv(samples));
            } else {
                const CutPlane plane =
                    pattern_cut == "E" ? CutPlane::e_plane : CutPlane::h_plane;
                const auto cut =
                    principal_cut(plane, design.geometry, design.substrate, k0, step);
                write_output(pattern_csv_path, io::pattern_csv(cut));
                if (!pattern_svg_path.empty()) {
                    const std::string title = pattern_cut == "E"
                                                  ? "E-plane pattern (dB)"
                                                  : "H-plane pattern (dB)";
                    write_output(pattern_svg_path, io::render_polar_svg(cut, title));
                }
            }
        } else if (sweep->parsed()) {
            double f0 = 0.0, bw = 0.0;
            const bool sweep_use_preset = !sweep_preset.empty();
            if (sweep_use_preset || !sweep_design.empty()) {
                if (sweep_use_preset && !sweep_design.empty()) {
                    throw std::invalid_argument("sweep: give one of --design or --preset");
                }
                const DesignResult design = load_design(sweep_design, sweep_use_preset);
                f0 = design.f0;
                bw = design.fractional_bandwidth;
            } else {
                if (!(sweep_f0_ghz > 0.0) || !(sweep_bw > 0.0)) {
                    throw std::invalid_argument(
                        "sweep: need --design, --preset, or --f0-ghz with --fractional-bw");
                }
                f0 = sweep_f0_ghz * 1e9;
                bw = sweep_bw;
            }
            const double r_res = sweep_r_res > 0.0 ? sweep_r_res : sweep_z0;
            const ResonatorModel model = calibrate_model(f0, bw, r_res, sweep_z0);
            const double f_start =
                sweep_from_ghz > 0.0 ? sweep_from_ghz * 1e9 : f0 * (1.0 - 2.0 * bw);
            const double f_stop = sweep_to_ghz > 0.0 ? sweep_to_ghz * 1e9 : f0 * (1.0 + 2.0 * bw);
            const auto points = frequency_sweep(model, f_start, f_stop, sweep_points);
            write_output(sweep_csv_path, io::sweep_csv(points));
        } else if (explore->parsed()) {
            const SearchSpace space = io::space_from_json(parse_json_file(explore_space));
            const Weights weights{explore_w_bw, explore_w_area};
            const auto ranked = grid_search(space, weights, explore_n_h);
            write_output(explore_csv_path, io::explore_csv(ranked));
        } else if (report->parsed()) {
            MetricSet benchmark{}, proposed{};
            ReportDoc doc{};
            if (report_preset == "paper") {
                benchmark = presets::paper_benchmark_metrics();
                proposed = presets::paper_proposed_metrics();
                doc = benchmark_report(benchmark, proposed);
                doc.notes = presets::paper_metric_notes();
            } else {
                if (report_benchmark.empty() || report_proposed.empty()) {
                    throw std::invalid_argument(
                        "report: need --preset paper or both --benchmark and --proposed");
                }
                benchmark = io::metrics_from_json(parse_json_file(report_benchmark));
                proposed = io::metrics_from_json(parse_json_file(report_proposed));
                doc = benchmark_report(benchmark, proposed);
            }
            if (report_format == "table") {
                write_output(report_out, report_table(doc));
            } else {
                write_output(report_out, dump(io::report_to_json(doc, !report_no_meta)));
            }
        } else if (preset->parsed()) {
            write_output(preset_out,
                         dump(io::design_to_json(paper_preset_design(), "paper-proposed")));
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
