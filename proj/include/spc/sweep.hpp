// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spc/cfar.hpp"
#include "spc/dictionary.hpp"
#include "spc/enrichment.hpp"
#include "spc/rd_frame.hpp"

namespace spc {

/// Wall-clock per stage in milliseconds; all zero unless timing was requested.
/// Timing never influences any data field.
struct StageTiming {
    double envelope_ms = 0.0;
    double cfar_ms = 0.0;
    double expand_ms = 0.0;
    double cloud_ms = 0.0;
    double enrich_ms = 0.0;
};

struct SweepEntry {
    double tau = 0.0;
    double density_pct = 0.0;
    std::uint64_t n_points = 0;          // consolidated peaks over all frames
    std::uint64_t n_enriched_points = 0; // after neighborhood expansion (== n_points when none)
    StageTiming timing;
};

struct SweepReport {
    RadarConfig config;
    std::vector<SweepEntry> entries;
};

struct SweepOptions {
    std::uint32_t window = 9;
    std::uint32_t guard = 3;
    std::optional<NeighborhoodConfig> neighborhood;
    std::optional<DescriptorConfig> descriptor;
    const BeamformingDictionary* dictionary = nullptr; // when set, clouds are built and timed
    bool timing = false;
};

/// Runs the pipeline over every frame for every threshold (taus must be
/// ascending) and aggregates densities and point counts. Densities within a
/// report are non-increasing in tau.
SweepReport sweep(std::span<const RdFrame> frames, std::span<const double> taus,
                  const SweepOptions& options);

/// JSON lines: a header line {"config": {...}, "schema": "spc-report/1"}
/// followed by one line per entry.
void save_report(const SweepReport& report, const std::string& path);
SweepReport load_report(const std::string& path);

} // namespace spc
