#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace patchlab {

/// Named performance figures for one design. Return loss is stored as a
/// positive dB magnitude.
struct MetricSet {
    double return_loss_db;
    double vswr;
    double gain_dbi;
    double patch_area_mm2;
    double bandwidth_hz;
    double ground_area_mm2;
    double freq_offset_hz;
};

/// Which side of the change the percentage is taken against.
enum class Convention { base_old, base_new };

/// Direction in which a metric improves.
enum class Better { higher, lower };

struct Improvement {
    double percent;  ///< signed: positive when the change goes the better way
    Convention convention;
    Better better;
    std::string note;
};

/// Two-design comparison document. Improvement rows keep the metric order of
/// the summary table; notes carry per-metric provenance.
struct ReportDoc {
    MetricSet benchmark;
    MetricSet proposed;
    std::vector<std::pair<std::string, Improvement>> improvements;
    std::map<std::string, std::string> notes;
};

/// Percentage change between two values under an explicit base convention.
/// The magnitude is |new - old| over the chosen base; the sign is positive
/// when the change moves in the stated better direction.
inline double improvement_percent(double old_value, double new_value, Convention convention,
                                  Better better) {
    const double base =
        convention == Convention::base_old ? std::abs(old_value) : std::abs(new_value);
    if (base == 0.0) {
        throw std::invalid_argument("improvement_percent: base value must be nonzero");
    }
    const double magnitude = std::abs(new_value - old_value) / base * 100.0;
    if (new_value == old_value) {
        return 0.0;
    }
    const bool improved = better == Better::higher ? new_value > old_value : new_value < old_value;
    return improved ? magnitude : -magnitude;
}

/// Builds the seven-row comparison between a benchmark and a proposed design,
/// using the per-row conventions of the reference comparison table: base_old
/// for return loss, VSWR, gain and bandwidth; base_new for the two areas; the
/// frequency-offset row reports 100% when the proposed offset vanishes.
inline ReportDoc benchmark_report(const MetricSet& benchmark, const MetricSet& proposed) {
    ReportDoc doc{benchmark, proposed, {}, {}};
    auto add = [&doc](const std::string& name, double old_v, double new_v,
                      Convention convention, Better better, std::string note = {}) {
        doc.improvements.emplace_back(
            name, Improvement{improvement_percent(old_v, new_v, convention, better),
                              convention, better, std::move(note)});
    };
    add("return_loss", benchmark.return_loss_db, proposed.return_loss_db, Convention::base_old,
        Better::higher);
    add("vswr", benchmark.vswr, proposed.vswr, Convention::base_old, Better::lower);
    add("gain", benchmark.gain_dbi, proposed.gain_dbi, Convention::base_old, Better::higher);
    add("patch_area", benchmark.patch_area_mm2, proposed.patch_area_mm2, Convention::base_new,
        Better::lower, "size reduction");
    add("bandwidth", benchmark.bandwidth_hz, proposed.bandwidth_hz, Convention::base_old,
        Better::higher);
    add("ground_area", benchmark.ground_area_mm2, proposed.ground_area_mm2,
        Convention::base_new, Better::lower, "size reduction");

    if (proposed.freq_offset_hz == benchmark.freq_offset_hz) {
        doc.improvements.emplace_back(
            "freq_offset",
            Improvement{0.0, Convention::base_old, Better::lower, "no change"});
    } else if (proposed.freq_offset_hz == 0.0 && benchmark.freq_offset_hz > 0.0) {
        doc.improvements.emplace_back(
            "freq_offset", Improvement{100.0, Convention::base_old, Better::lower,
                                       "no frequency offset error"});
    } else {
        add("freq_offset", benchmark.freq_offset_hz, proposed.freq_offset_hz,
            Convention::base_old, Better::lower);
    }
    return doc;
}

}  // namespace patchlab
