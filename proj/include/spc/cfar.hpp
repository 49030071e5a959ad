// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "spc/envelope.hpp"
#include "spc/radar_config.hpp"
#include "spc/tx_code_map.hpp"

namespace spc {

/// CA-CFAR geometry and threshold. Window and guard are odd side lengths of
/// square regions centered on the cell under test; tau is a linear SNR ratio.
struct CfarConfig {
    std::uint32_t window = 9;
    std::uint32_t guard = 3;
    double tau = 1.0;

    void validate() const;
};

/// One grid cell; `bin` is a consolidated Doppler index in P(tau) and a
/// full-axis Doppler index in S(tau).
struct Cell {
    std::uint32_t range = 0;
    std::uint32_t bin = 0;

    auto operator<=>(const Cell&) const = default;
};

/// Consolidated detections P(tau) plus their replica expansion S(tau) onto the
/// full RD grid. Both lists are sorted lexicographically and duplicate-free.
struct PeakSet {
    double tau = 0.0;
    std::vector<Cell> consolidated;
    std::vector<Cell> expanded;
};

/// Cell-averaging CFAR: detects cells with E / mu > tau, where mu is the mean
/// of envelope cells inside the training window excluding the guard window,
/// both truncated at grid boundaries. mu == 0 declares a detection iff E > 0.
/// Integral-image noise estimate, parallel over rows; output is sorted.
std::vector<Cell> ca_cfar(const Envelope& env, const CfarConfig& config);

/// Expands consolidated peaks through the Tx code map onto the full Doppler
/// axis. |expanded| = replicas * |consolidated|.
PeakSet expand_peaks(const std::vector<Cell>& peaks, const TxCodeMap& map, double tau);

/// Retained full-grid cells as a percentage of n_range * n_doppler.
double density_pct(const PeakSet& peaks, const RadarConfig& config);

/// JSON {tau, consolidated: [[r,l]...], expanded: [[r,d]...]}, sorted for
/// deterministic diffs.
void save_peak_set(const PeakSet& peaks, const std::string& path);
PeakSet load_peak_set(const std::string& path);

} // namespace spc
