// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spc/radar_config.hpp"

namespace spc {

/// Deterministic mapping from a consolidated cell (r, l) to the M full-axis
/// Doppler bins that carry its Tx replicas. For every range row the per-l bin
/// sets partition the full Doppler axis; that invariant is enforced at
/// construction.
///
/// The default layout is the range-independent uniform interleave
/// T(r, l) = { l + m * n_consolidated : m = 0..M-1 }. A calibrated layout can
/// be supplied as an explicit table; the range argument is part of the lookup
/// signature so a range-dependent calibration can slot in behind it.
class TxCodeMap {
public:
    /// Uniform interleave layout. Requires n_doppler % n_tx_signatures == 0.
    static TxCodeMap interleave(std::uint32_t n_doppler, std::uint32_t n_tx_signatures);
    static TxCodeMap interleave(const RadarConfig& config);

    /// Explicit layout: table is row-major (n_consolidated x replicas); rows
    /// are sorted ascending on construction. Throws ConfigError if the rows
    /// do not partition {0..n_doppler-1}.
    TxCodeMap(std::uint32_t n_doppler, std::uint32_t n_consolidated,
              std::vector<std::uint32_t> table);

    std::uint32_t n_doppler() const { return n_doppler_; }
    std::uint32_t n_consolidated() const { return n_consolidated_; }
    std::uint32_t replicas() const { return replicas_; }

    /// Full-axis bins of consolidated cell (r, l), ascending.
    std::span<const std::uint32_t> bins(std::uint32_t r, std::uint32_t l) const {
        (void)r;
        return {table_.data() + std::size_t(l) * replicas_, replicas_};
    }

    /// Consolidated bin owning full-axis bin d at range r.
    std::uint32_t consolidated_bin(std::uint32_t r, std::uint32_t d) const {
        (void)r;
        return inverse_[d];
    }

    /// Inverse lookup table for one range row (full bin -> consolidated bin).
    std::span<const std::uint32_t> inverse_row(std::uint32_t r) const {
        (void)r;
        return inverse_;
    }

    /// Throws ConfigError when the map and config axes disagree.
    void check_compatible(const RadarConfig& config) const;

private:
    std::uint32_t n_doppler_ = 0;
    std::uint32_t n_consolidated_ = 0;
    std::uint32_t replicas_ = 0;
    std::vector<std::uint32_t> table_;   // (n_consolidated x replicas), rows ascending
    std::vector<std::uint32_t> inverse_; // n_doppler entries
};

} // namespace spc
