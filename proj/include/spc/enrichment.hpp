// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spc/cloud.hpp"

namespace spc {

/// Square RD neighborhood side length; n = 1 is the identity expansion.
struct NeighborhoodConfig {
    std::uint32_t n = 3;

    std::uint32_t half() const { return (n - 1) / 2; }
    void validate() const;
};

/// Angular sector counts for the pooled angle-spectrum descriptor.
struct DescriptorConfig {
    std::uint32_t n_az = 32;
    std::uint32_t n_el = 1;

    void validate() const;
};

/// Union of the n x n neighborhoods of every peak on the consolidated grid,
/// truncated at the boundaries. Result is sorted and duplicate-free.
std::vector<Cell> expand_neighborhood(const std::vector<Cell>& peaks,
                                      const NeighborhoodConfig& config,
                                      std::uint32_t n_range, std::uint32_t n_consolidated);

/// Sector-max pooling of an angle spectrum laid out azimuth-major on an
/// (n_az_grid, n_el_grid) grid. Sectors partition the grid; when the grid size
/// is not divisible by the sector count the last sector absorbs the remainder.
/// Output is flattened azimuth-major, length config.n_az * config.n_el.
std::vector<double> angle_descriptor(std::span<const double> spectrum,
                                     std::uint32_t n_az_grid, std::uint32_t n_el_grid,
                                     const DescriptorConfig& config);

/// Builds an enriched cloud: neighborhood expansion grows the peak set before
/// Tx expansion (every added cell becomes a full point with its own snapshot
/// and AoA), and the descriptor config attaches pooled angle-spectrum features
/// to every point. At least one of the two configs must be present.
SpectralPointCloud enrich_cloud(const RdFrame& frame, const PeakSet& peaks,
                                const BeamformingDictionary& dict, const TxCodeMap& map,
                                const std::optional<NeighborhoodConfig>& neighborhood,
                                const std::optional<DescriptorConfig>& descriptor);

} // namespace spc
