// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spc {

/// Order in which a virtual-array snapshot is stacked. replica_major means:
/// for each mapped Doppler bin d in ascending order, append all receiver
/// channels. Dictionaries record the order they were calibrated for so an
/// external calibration cannot silently mismatch the gather.
enum class SnapshotOrder : std::uint8_t { replica_major = 0 };

struct Direction {
    float azimuth = 0.0f;   // radians
    float elevation = 0.0f; // radians

    bool operator==(const Direction&) const = default;
};

/// Calibrated beamforming matrix over an azimuth-elevation grid. Rows are
/// azimuth-major: row k corresponds to directions[k] with
/// k = az_index * n_el + el_index.
struct BeamformingDictionary {
    std::uint32_t n_az = 0;
    std::uint32_t n_el = 0;
    std::uint32_t n_virtual = 0;
    SnapshotOrder order = SnapshotOrder::replica_major;
    std::vector<Direction> directions;           // n_az * n_el entries
    std::vector<std::complex<float>> weights;    // row-major (n_az*n_el, n_virtual)

    std::uint32_t n_directions() const { return n_az * n_el; }

    std::span<const std::complex<float>> row(std::uint32_t k) const {
        return {weights.data() + std::size_t(k) * n_virtual, n_virtual};
    }

    /// Throws ConfigError on shape mismatches, non-finite weights, or
    /// duplicate directions.
    void validate() const;
};

/// Dictionary binary format "SPCB", little-endian:
///   magic "SPCB" | u32 n_az | u32 n_el | u32 n_virtual | u8 stacking-order tag
///   | n_az*n_el (f32 az, f32 el) pairs | row-major complex f32 matrix.
BeamformingDictionary load_dictionary(const std::string& path);
void save_dictionary(const BeamformingDictionary& dict, const std::string& path);

} // namespace spc
