#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "patchlab/design.hpp"
#include "patchlab/explore.hpp"
#include "patchlab/numeric.hpp"
#include "patchlab/radiation.hpp"
#include "patchlab/report.hpp"
#include "patchlab/sweep.hpp"

namespace patchlab::io {

inline constexpr const char* kDesignSchema = "patchlab/design-v1";
inline constexpr const char* kMetricsSchema = "patchlab/metrics-v1";
inline constexpr const char* kReportSchema = "patchlab/report-v1";
inline constexpr const char* kSpaceSchema = "patchlab/space-v1";

/// Shortest round-trip decimal formatting, locale independent.
inline std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf, ptr);
}

namespace detail {

/// Quantize to 1e-9 so converted angle columns print as clean degrees.
inline double snap(double value) { return std::round(value * 1e9) / 1e9; }

inline void require_fields(const nlohmann::json& j, std::initializer_list<const char*> names,
                           const std::string& where) {
    std::string missing;
    for (const char* name : names) {
        if (!j.contains(name)) {
            if (!missing.empty()) missing += ", ";
            missing += name;
        }
    }
    if (!missing.empty()) {
        throw std::invalid_argument(where + ": missing fields: " + missing);
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Design documents
// ---------------------------------------------------------------------------

inline nlohmann::json design_to_json(const DesignResult& design,
                                     const std::string& source = {}) {
    nlohmann::json j{
        {"schema", kDesignSchema},
        {"f0_hz", design.f0},
        {"substrate", {{"eps_r", design.substrate.eps_r}, {"h_m", design.substrate.h}}},
        {"geometry",
         {{"L_m", design.geometry.l},
          {"W_m", design.geometry.w},
          {"t_m", design.geometry.t},
          {"delta_L_m", design.geometry.delta_l},
          {"L_eff_m", design.geometry.l_eff}}},
        {"ground_side_m", design.ground_side},
        {"eps_eff", design.eps_eff},
        {"fractional_bandwidth", design.fractional_bandwidth},
        {"derived", {{"f0_ghz", design.f0 / 1e9}}},
    };
    if (design.substrate.tan_delta) {
        j["substrate"]["tan_delta"] = *design.substrate.tan_delta;
    }
    if (!source.empty()) {
        j["source"] = source;
    }
    return j;
}

inline DesignResult design_from_json(const nlohmann::json& j) {
    detail::require_fields(j,
                           {"schema", "f0_hz", "substrate", "geometry", "ground_side_m",
                            "eps_eff", "fractional_bandwidth"},
                           "design document");
    if (j.at("schema").get<std::string>() != kDesignSchema) {
        throw std::invalid_argument("design document: unsupported schema");
    }
    const auto& js = j.at("substrate");
    detail::require_fields(js, {"eps_r", "h_m"}, "design document substrate");
    const auto& jg = j.at("geometry");
    detail::require_fields(jg, {"L_m", "W_m", "t_m", "delta_L_m", "L_eff_m"},
                           "design document geometry");
    std::optional<double> tan_delta;
    if (js.contains("tan_delta")) {
        tan_delta = js.at("tan_delta").get<double>();
    }
    Substrate substrate(js.at("eps_r").get<double>(), js.at("h_m").get<double>(), tan_delta);
    PatchGeometry geometry(jg.at("L_m").get<double>(), jg.at("W_m").get<double>(),
                           jg.at("t_m").get<double>(), jg.at("delta_L_m").get<double>(),
                           jg.at("L_eff_m").get<double>());
    return DesignResult{geometry,
                        j.at("eps_eff").get<double>(),
                        substrate,
                        j.at("f0_hz").get<double>(),
                        j.at("ground_side_m").get<double>(),
                        j.at("fractional_bandwidth").get<double>()};
}

// ---------------------------------------------------------------------------
// Metric sets and comparison reports
// ---------------------------------------------------------------------------

inline nlohmann::json metrics_to_json(const MetricSet& m, const std::string& source = {}) {
    nlohmann::json j{
        {"schema", kMetricsSchema},
        {"return_loss_db", m.return_loss_db},
        {"vswr", m.vswr},
        {"gain_dbi", m.gain_dbi},
        {"patch_area_mm2", m.patch_area_mm2},
        {"bandwidth_hz", m.bandwidth_hz},
        {"ground_area_mm2", m.ground_area_mm2},
        {"freq_offset_hz", m.freq_offset_hz},
    };
    if (!source.empty()) {
        j["source"] = source;
    }
    return j;
}

inline MetricSet metrics_from_json(const nlohmann::json& j) {
    detail::require_fields(j,
                           {"return_loss_db", "vswr", "gain_dbi", "patch_area_mm2",
                            "bandwidth_hz", "ground_area_mm2", "freq_offset_hz"},
                           "metric set");
    return MetricSet{
        j.at("return_loss_db").get<double>(), j.at("vswr").get<double>(),
        j.at("gain_dbi").get<double>(),       j.at("patch_area_mm2").get<double>(),
        j.at("bandwidth_hz").get<double>(),   j.at("ground_area_mm2").get<double>(),
        j.at("freq_offset_hz").get<double>(),
    };
}

inline const char* to_string(Convention c) {
    return c == Convention::base_old ? "base_old" : "base_new";
}

inline const char* to_string(Better b) { return b == Better::higher ? "higher" : "lower"; }

inline nlohmann::json report_to_json(const ReportDoc& doc, bool with_meta = true) {
    nlohmann::json improvements = nlohmann::json::object();
    for (const auto& [name, imp] : doc.improvements) {
        nlohmann::json row{
            {"percent", imp.percent},
            {"convention", to_string(imp.convention)},
            {"better", to_string(imp.better)},
        };
        if (!imp.note.empty()) {
            row["note"] = imp.note;
        }
        improvements[name] = std::move(row);
    }
    nlohmann::json j{
        {"schema", kReportSchema},
        {"benchmark", metrics_to_json(doc.benchmark)},
        {"proposed", metrics_to_json(doc.proposed)},
        {"improvements", std::move(improvements)},
        {"notes", doc.notes},
    };
    if (with_meta) {
        j["meta"] = {{"tool", "patchlab"}, {"version", "1.0.0"}};
    }
    return j;
}

// ---------------------------------------------------------------------------
// Search-space documents
// ---------------------------------------------------------------------------

inline SearchSpace space_from_json(const nlohmann::json& j) {
    detail::require_fields(j, {"schema", "eps_r_choices", "h_min_m", "h_max_m", "f0_target_hz"},
                           "search space");
    if (j.at("schema").get<std::string>() != kSpaceSchema) {
        throw std::invalid_argument("search space: unsupported schema");
    }
    SearchSpace space;
    space.eps_r_choices = j.at("eps_r_choices").get<std::vector<double>>();
    space.h_min = j.at("h_min_m").get<double>();
    space.h_max = j.at("h_max_m").get<double>();
    space.f0_target = j.at("f0_target_hz").get<double>();
    if (j.contains("max_footprint_m2")) {
        space.max_footprint = j.at("max_footprint_m2").get<double>();
    }
    return space;
}

// ---------------------------------------------------------------------------
// CSV exports
// ---------------------------------------------------------------------------

inline std::string pattern_csv(const std::vector<PatternSample>& samples) {
    std::string out = "theta_deg,phi_deg,magnitude,magnitude_db\n";
    for (const PatternSample& s : samples) {
        out += format_double(detail::snap(rad_to_deg(s.theta)));
        out += ',';
        out += format_double(detail::snap(rad_to_deg(s.phi)));
        out += ',';
        out += format_double(s.value);
        out += ',';
        out += format_double(s.value_db);
        out += '\n';
    }
    return out;
}

inline std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::string out = "freq_hz,s11_db,vswr\n";
    for (const SweepPoint& p : points) {
        out += format_double(p.f);
        out += ',';
        out += format_double(p.s11_db);
        out += ',';
        out += format_double(p.vswr);
        out += '\n';
    }
    return out;
}

inline std::string explore_csv(const std::vector<Candidate>& candidates) {
    std::string out = "rank,eps_r,h_m,objective,fractional_bandwidth,footprint_m2,w_over_l\n";
    int rank = 1;
    for (const Candidate& c : candidates) {
        out += std::to_string(rank++);
        out += ',';
        out += format_double(c.substrate.eps_r);
        out += ',';
        out += format_double(c.substrate.h);
        out += ',';
        out += format_double(c.objective);
        out += ',';
        out += format_double(c.metrics.at("fractional_bandwidth"));
        out += ',';
        out += format_double(c.metrics.at("footprint_m2"));
        out += ',';
        out += format_double(c.metrics.at("w_over_l"));
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polar SVG rendering
// ---------------------------------------------------------------------------

namespace detail {

inline std::string fixed2(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 2);
    if (ec != std::errc{}) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf, ptr);
}

inline std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace detail

/// Self-contained polar plot of one normalized cut: 800x800 viewBox, radial
/// dB scale from -40 to 0 in 10 dB rings, angular ticks every 30 degrees, and
/// a single data polyline. Values below -40 dB clamp to the center.
inline std::string render_polar_svg(const std::vector<PatternSample>& cut,
                                    const std::string& title) {
    if (cut.size() < 2) {
        throw std::invalid_argument("render_polar_svg: need at least 2 samples");
    }
    constexpr double cx = 400.0, cy = 400.0, radius = 340.0;
    constexpr double db_min = -40.0;

    // The cut varies either theta (E-plane) or phi (H-plane).
    bool theta_varies = false;
    for (const PatternSample& s : cut) {
        if (s.theta != cut.front().theta) {
            theta_varies = true;
            break;
        }
    }
    std::vector<double> angles;
    angles.reserve(cut.size());
    for (const PatternSample& s : cut) {
        double a = theta_varies ? s.theta : s.phi;
        // Unwrap an azimuth cut that straddles 0 so the polyline is continuous.
        if (!theta_varies && a > constants::pi) a -= constants::two_pi;
        angles.push_back(a);
    }
    std::vector<std::size_t> order(cut.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n"
        "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    svg += "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"18\">" +
           detail::escape_xml(title) + "</text>\n";
    for (int db = -30; db <= 0; db += 10) {
        const double r = radius * (db - db_min) / (0.0 - db_min);
        svg += "<circle cx=\"400\" cy=\"400\" r=\"" + detail::fixed2(r) +
               "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
        svg += "<text x=\"405\" y=\"" + detail::fixed2(cy - r - 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#888888\">" +
               std::to_string(db) + " dB</text>\n";
    }
    for (int deg = 0; deg < 360; deg += 30) {
        const double a = deg_to_rad(deg);
        const double x = cx + radius * std::sin(a);
        const double y = cy - radius * std::cos(a);
        svg += "<line x1=\"400\" y1=\"400\" x2=\"" + detail::fixed2(x) + "\" y2=\"" +
               detail::fixed2(y) + "\" stroke=\"#eeeeee\"/>\n";
        const double lx = cx + (radius + 20.0) * std::sin(a);
        const double ly = cy - (radius + 20.0) * std::cos(a);
        svg += "<text x=\"" + detail::fixed2(lx) + "\" y=\"" + detail::fixed2(ly) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               std::to_string(deg) + "&#176;</text>\n";
    }
    svg += "<polyline fill=\"none\" stroke=\"#1f5fb4\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t idx : order) {
        const PatternSample& s = cut[idx];
        const double frac = std::clamp((s.value_db - db_min) / (0.0 - db_min), 0.0, 1.0);
        const double r = radius * frac;
        const double x = cx + r * std::sin(angles[idx]);
        const double y = cy - r * std::cos(angles[idx]);
        if (!first) svg += ' ';
        svg += detail::fixed2(x) + "," + detail::fixed2(y);
        first = false;
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

}  // namespace patchlab::io
