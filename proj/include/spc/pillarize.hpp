// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spc/cloud.hpp"

namespace spc {

/// Polar BEV pillar grid. A point at (r meters, a radians) lands in cell
/// (floor((r - range_lo) / dr), floor((a - azimuth_lo) / da)); points outside
/// [lo, hi) or with non-finite coordinates are rejected and counted.
struct PillarGrid {
    std::uint32_t n_range_cells = 256;
    std::uint32_t n_azimuth_cells = 448;
    std::uint32_t downsample = 2;
    double range_lo = 0.0;
    double range_hi = 0.0;
    double azimuth_lo = 0.0;
    double azimuth_hi = 0.0;

    void validate() const;
};

/// Dense BEV canvas, row-major (range, azimuth): per-cell point count, max
/// angle amplitude, and mean consolidated Doppler bin (0 where empty).
struct PillarCanvas {
    std::uint32_t n_range = 0;
    std::uint32_t n_azimuth = 0;
    std::vector<double> count;
    std::vector<double> max_amplitude;
    std::vector<double> mean_doppler;

    std::size_t cell(std::uint32_t r, std::uint32_t a) const {
        return std::size_t(r) * n_azimuth + a;
    }
};

struct PillarResult {
    PillarCanvas full;
    PillarCanvas downsampled; // pooled so it equals direct binning at coarse resolution
    std::uint64_t n_binned = 0;
    std::uint64_t n_rejected = 0;
};

PillarResult pillarize(const SpectralPointCloud& cloud, const PillarGrid& grid);

/// Canvas binary format "SPCG", little-endian: magic | u32 n_range |
/// u32 n_azimuth | u32 downsample | u64 n_binned | u64 n_rejected | the three
/// full-resolution f64 planes | u32 ds dims | the three downsampled planes.
void save_canvas(const PillarResult& result, std::uint32_t downsample,
                 const std::string& path);

} // namespace spc
