// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

namespace spc {

/// Sensor geometry of one range-Doppler frame. The full Doppler axis carries
/// n_tx_signatures replicas of each of the n_doppler_consolidated physical
/// Doppler cells, so n_doppler = n_tx_signatures * n_doppler_consolidated.
struct RadarConfig {
    std::uint32_t n_rx = 0;                   ///< physical receiver channels
    std::uint32_t n_range = 0;                ///< range bins
    std::uint32_t n_doppler = 0;              ///< full Doppler bins
    std::uint32_t n_doppler_consolidated = 0; ///< Doppler bins after replica consolidation
    std::uint32_t n_tx_signatures = 0;        ///< Tx replicas per consolidated bin
    float range_resolution = 0.0f;            ///< meters per range bin
    float doppler_resolution = 0.0f;          ///< (m/s) per consolidated Doppler bin

    std::uint32_t n_virtual() const { return n_rx * n_tx_signatures; }

    std::uint64_t rd_cells() const {
        return std::uint64_t(n_range) * std::uint64_t(n_doppler);
    }

    std::uint64_t sample_count() const { return std::uint64_t(n_rx) * rd_cells(); }

    /// Throws ConfigError if any count is zero, a resolution is not a positive
    /// finite value, or the replica factorization does not hold.
    void validate() const;

    bool operator==(const RadarConfig&) const = default;
};

/// JSON object with the field names above (n_doppler_consolidated may be
/// omitted and is then derived from n_doppler / n_tx_signatures).
RadarConfig load_radar_config(const std::string& path);
void save_radar_config(const RadarConfig& config, const std::string& path);

} // namespace spc
