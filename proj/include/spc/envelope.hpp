// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spc/rd_frame.hpp"
#include "spc/tx_code_map.hpp"

namespace spc {

/// Consolidated RD power envelope, row-major (range, consolidated doppler),
/// linear power units.
struct Envelope {
    std::uint32_t n_range = 0;
    std::uint32_t n_consolidated = 0;
    std::vector<double> values;

    double& at(std::uint32_t r, std::uint32_t l) {
        return values[std::size_t(r) * n_consolidated + l];
    }
    double at(std::uint32_t r, std::uint32_t l) const {
        return values[std::size_t(r) * n_consolidated + l];
    }

    static Envelope zeros(std::uint32_t n_range, std::uint32_t n_consolidated);
};

/// E(r, l) = sum over channels c and replica bins d in T(r, l) of |R[c, r, d]|^2.
/// Accumulates in double; parallel over range rows.
Envelope compute_envelope(const RdFrame& frame, const TxCodeMap& map);

/// Plain CSV, one range row per line.
void save_envelope_csv(const Envelope& env, const std::string& path);

} // namespace spc
