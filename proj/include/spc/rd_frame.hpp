// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "spc/radar_config.hpp"

namespace spc {

/// Complex per-receiver range-Doppler tensor, row-major (channel, range, doppler).
struct RdFrame {
    RadarConfig config;
    std::vector<std::complex<float>> data;

    std::size_t index(std::uint32_t c, std::uint32_t r, std::uint32_t d) const {
        return (std::size_t(c) * config.n_range + r) * config.n_doppler + d;
    }

    std::complex<float>& at(std::uint32_t c, std::uint32_t r, std::uint32_t d) {
        return data[index(c, r, d)];
    }
    const std::complex<float>& at(std::uint32_t c, std::uint32_t r, std::uint32_t d) const {
        return data[index(c, r, d)];
    }

    static RdFrame zeros(const RadarConfig& config);

    /// Throws ConfigError on a size mismatch or any non-finite sample.
    void validate() const;
};

} // namespace spc
