#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "patchlab/io.hpp"
#include "patchlab/presets.hpp"

using Catch::Approx;
using namespace patchlab;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

// Minimal well-formedness scan: tags balance and attributes stay quoted.
bool xml_balanced(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        std::size_t end = text.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;
        const bool closing = tag[0] == '/';
        const bool self_closing = tag.back() == '/';
        std::string name = tag.substr(closing ? 1 : 0);
        name = name.substr(0, name.find_first_of(" \t\n/"));
        if (closing) {
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (!self_closing) {
            stack.push_back(name);
        }
    }
    return stack.empty();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("design documents round-trip bit-identically", "[io]") {
    const DesignResult design = synthesize(10e9, Substrate(4.4, 1.6e-3, 0.02));
    const nlohmann::json j = io::design_to_json(design);
    REQUIRE(j.at("schema") == "patchlab/design-v1");
    REQUIRE(j.at("derived").at("f0_ghz") == Approx(10.0));

    const std::string text = j.dump(2);
    const DesignResult back = io::design_from_json(nlohmann::json::parse(text));
    REQUIRE(bit_equal(back.f0, design.f0));
    REQUIRE(bit_equal(back.eps_eff, design.eps_eff));
    REQUIRE(bit_equal(back.fractional_bandwidth, design.fractional_bandwidth));
    REQUIRE(bit_equal(back.ground_side, design.ground_side));
    REQUIRE(bit_equal(back.geometry.l, design.geometry.l));
    REQUIRE(bit_equal(back.geometry.w, design.geometry.w));
    REQUIRE(bit_equal(back.geometry.delta_l, design.geometry.delta_l));
    REQUIRE(bit_equal(back.geometry.l_eff, design.geometry.l_eff));
    REQUIRE(bit_equal(back.substrate.eps_r, design.substrate.eps_r));
    REQUIRE(bit_equal(back.substrate.h, design.substrate.h));
    REQUIRE(back.substrate.tan_delta.has_value());
    REQUIRE(bit_equal(*back.substrate.tan_delta, *design.substrate.tan_delta));

    // Serialization itself is deterministic.
    REQUIRE(io::design_to_json(back).dump(2) == text);
}

TEST_CASE("design parsing lists missing fields by name", "[io]") {
    nlohmann::json j = io::design_to_json(synthesize(10e9, Substrate(4.4, 1.6e-3)));
    j.erase("eps_eff");
    j.erase("ground_side_m");
    try {
        io::design_from_json(j);
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        REQUIRE(msg.find("eps_eff") != std::string::npos);
        REQUIRE(msg.find("ground_side_m") != std::string::npos);
    }
}

TEST_CASE("metric sets parse and report missing fields", "[io]") {
    const MetricSet m = presets::paper_proposed_metrics();
    const MetricSet back = io::metrics_from_json(io::metrics_to_json(m, "test"));
    REQUIRE(bit_equal(back.vswr, m.vswr));
    REQUIRE(bit_equal(back.bandwidth_hz, m.bandwidth_hz));

    nlohmann::json j = io::metrics_to_json(m);
    j.erase("vswr");
    j.erase("gain_dbi");
    try {
        io::metrics_from_json(j);
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        REQUIRE(msg.find("vswr") != std::string::npos);
        REQUIRE(msg.find("gain_dbi") != std::string::npos);
    }
}

TEST_CASE("CSV schemas are fixed", "[io]") {
    const std::vector<PatternSample> samples{
        {0.0, 0.0, 1.0, 0.0},
        {deg_to_rad(90.0), 0.0, 0.5, -6.0206},
    };
    const std::string pattern = io::pattern_csv(samples);
    REQUIRE(pattern.rfind("theta_deg,phi_deg,magnitude,magnitude_db\n", 0) == 0);
    REQUIRE(pattern.find("90,0,0.5,") != std::string::npos);
    REQUIRE(pattern.find('\r') == std::string::npos);

    const std::vector<SweepPoint> points{{9.5e9, -20.0, 1.2}, {10e9, -30.0, 1.05}};
    const std::string sweep = io::sweep_csv(points);
    REQUIRE(sweep.rfind("freq_hz,s11_db,vswr\n", 0) == 0);
    REQUIRE(sweep.find("9.5e+09,-20,1.2\n") != std::string::npos);
}

TEST_CASE("report JSON carries conventions, notes and optional metadata", "[io]") {
    ReportDoc doc = benchmark_report(presets::paper_benchmark_metrics(),
                                     presets::paper_proposed_metrics());
    doc.notes = presets::paper_metric_notes();
    const nlohmann::json with_meta = io::report_to_json(doc, true);
    REQUIRE(with_meta.contains("meta"));
    REQUIRE(with_meta.at("improvements").at("vswr").at("convention") == "base_old");
    REQUIRE(with_meta.at("improvements").at("ground_area").at("convention") == "base_new");
    REQUIRE(with_meta.at("notes").at("gain").get<std::string>().find("paper-reference") !=
            std::string::npos);

    const nlohmann::json without_meta = io::report_to_json(doc, false);
    REQUIRE_FALSE(without_meta.contains("meta"));
}

TEST_CASE("constant 0 dB cut renders on the outer ring", "[io][svg]") {
    std::vector<PatternSample> cut;
    for (int deg = 0; deg <= 180; deg += 5) {
        cut.push_back(PatternSample{deg_to_rad(deg), 0.0, 1.0, 0.0});
    }
    const std::string svg = io::render_polar_svg(cut, "uniform");
    REQUIRE(xml_balanced(svg));
    REQUIRE(count_occurrences(svg, "<polyline") == 1);

    // Every polyline vertex must sit on the outer ring (radius 340 around 400,400).
    const std::size_t start = svg.find("points=\"") + 8;
    const std::size_t stop = svg.find('"', start);
    std::string pts = svg.substr(start, stop - start);
    std::size_t pos = 0;
    int vertices = 0;
    while (pos < pts.size()) {
        std::size_t comma = pts.find(',', pos);
        std::size_t space = pts.find(' ', comma);
        if (space == std::string::npos) space = pts.size();
        const double x = std::stod(pts.substr(pos, comma - pos));
        const double y = std::stod(pts.substr(comma + 1, space - comma - 1));
        const double r = std::hypot(x - 400.0, y - 400.0);
        REQUIRE(std::abs(r - 340.0) < 0.5);
        pos = space + 1;
        ++vertices;
    }
    REQUIRE(vertices == static_cast<int>(cut.size()));
}

TEST_CASE("floored samples clamp to the center", "[io][svg]") {
    std::vector<PatternSample> cut;
    for (int deg = 0; deg <= 180; deg += 30) {
        cut.push_back(PatternSample{deg_to_rad(deg), 0.0, 0.001, -60.0});
    }
    const std::string svg = io::render_polar_svg(cut, "floor");
    const std::size_t start = svg.find("points=\"") + 8;
    const std::size_t stop = svg.find('"', start);
    std::string pts = svg.substr(start, stop - start);
    std::size_t pos = 0;
    while (pos < pts.size()) {
        std::size_t comma = pts.find(',', pos);
        std::size_t space = pts.find(' ', comma);
        if (space == std::string::npos) space = pts.size();
        const double x = std::stod(pts.substr(pos, comma - pos));
        const double y = std::stod(pts.substr(comma + 1, space - comma - 1));
        REQUIRE(std::hypot(x - 400.0, y - 400.0) < 0.5);  // at the center, never negative
        pos = space + 1;
    }
}

TEST_CASE("SVG rendering rejects degenerate cuts", "[io][svg]") {
    REQUIRE_THROWS_AS(io::render_polar_svg({}, "empty"), std::invalid_argument);
    REQUIRE_THROWS_AS(io::render_polar_svg({PatternSample{0, 0, 1, 0}}, "single"),
                      std::invalid_argument);
}

TEST_CASE("H-plane SVG stays a single continuous polyline", "[io][svg]") {
    const DesignResult design = presets::synthesized_reference();
    const double k0 = make_operating_point(design.f0).k0;
    const auto cut = principal_cut(CutPlane::h_plane, design.geometry, design.substrate, k0,
                                   deg_to_rad(5.0));
    const std::string svg = io::render_polar_svg(cut, "H-plane");
    REQUIRE(xml_balanced(svg));
    REQUIRE(count_occurrences(svg, "<polyline") == 1);
}
