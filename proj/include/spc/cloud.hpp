// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "spc/cfar.hpp"
#include "spc/dictionary.hpp"
#include "spc/rd_frame.hpp"
#include "spc/tx_code_map.hpp"

namespace spc {

/// One spectrally grounded point: a CFAR peak annotated with the dominant-beam
/// direction and amplitude, plus an optional pooled angle-spectrum descriptor.
struct SpectralPoint {
    std::uint32_t range_bin = 0;
    std::uint32_t doppler_bin = 0; // consolidated index
    float azimuth = 0.0f;          // radians, dictionary grid direction
    float elevation = 0.0f;        // radians
    double angle_amplitude = 0.0;  // max of the angle spectrum, linear
    std::uint32_t beam_index = unknown_beam;
    Cell origin;                   // consolidated cell the point was built from
    std::vector<double> descriptor;

    static constexpr std::uint32_t unknown_beam = std::numeric_limits<std::uint32_t>::max();
};

/// neighborhood_n == 1 means no neighborhood expansion; desc_az == 0 means no
/// descriptor columns.
struct EnrichmentFlags {
    std::uint32_t neighborhood_n = 1;
    std::uint32_t desc_az = 0;
    std::uint32_t desc_el = 0;

    bool operator==(const EnrichmentFlags&) const = default;
};

struct SpectralPointCloud {
    RadarConfig config;
    double tau = 0.0;
    EnrichmentFlags enrichment;
    std::vector<SpectralPoint> points;
};

/// Virtual-array snapshot at one consolidated peak: R[:, r, T(r, l)] stacked
/// replica-major (each mapped bin ascending, all receivers per bin).
std::vector<std::complex<float>> snapshot(const RdFrame& frame, Cell peak,
                                          const TxCodeMap& map);

/// s = |B v|, elementwise modulus of the dictionary matrix-vector product.
/// float32 operands, double accumulation; parallel over dictionary rows.
std::vector<double> angle_spectrum(std::span<const std::complex<float>> v,
                                   const BeamformingDictionary& dict);

struct AoaEstimate {
    std::uint32_t beam_index = 0;
    float azimuth = 0.0f;
    float elevation = 0.0f;
    double amplitude = 0.0;
};

/// Argmax of the angle spectrum; ties break to the lowest index.
AoaEstimate estimate_aoa(std::span<const double> spectrum,
                         const BeamformingDictionary& dict);

/// One point per consolidated peak, processed independently in parallel and
/// emitted in peak-sorted order.
SpectralPointCloud build_cloud(const RdFrame& frame, const PeakSet& peaks,
                               const BeamformingDictionary& dict, const TxCodeMap& map);

/// Point cloud exports. save_cloud writes three files derived from csv_path:
///   <stem>.csv   header r_bin,az_rad,el_rad,doppler_bin,angle_amp[,desc_0...]
///   <stem>.spcp  binary twin, same ordering: magic "SPCP" | u32 n_points |
///                u32 n_desc | per point u32 r_bin, f32 az, f32 el, u32 d_bin,
///                f64 angle_amp, f64 desc[n_desc]
///   <stem>.json  sidecar {schema, tau, neighborhood_n, n_az, n_el, config}
/// Numeric text uses shortest round-trip formatting, so save -> load -> save
/// is byte-identical.
void save_cloud(const SpectralPointCloud& cloud, const std::string& csv_path);
SpectralPointCloud load_cloud(const std::string& csv_path);

/// Reads just the binary twin (points only; metadata still comes from the sidecar).
std::vector<SpectralPoint> load_cloud_binary(const std::string& spcp_path);

} // namespace spc
