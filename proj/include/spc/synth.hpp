// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spc/dictionary.hpp"
#include "spc/radar_config.hpp"
#include "spc/rd_frame.hpp"
#include "spc/tx_code_map.hpp"

namespace spc {

/// Virtual-array element positions in wavelength units, listed in snapshot
/// (replica-major) order. Axes: x across the aperture, y boresight, z up;
/// a direction (az, el) has unit vector
///   u = (sin az * cos el, cos az * cos el, sin el).
struct ArrayGeometry {
    std::vector<std::array<double, 3>> elements;

    static ArrayGeometry uniform_linear(std::uint32_t n_elements, double spacing = 0.5);
};

/// Point target at a bin center. Azimuth/elevation are stored as float so a
/// target can sit exactly on a dictionary grid direction.
struct SyntheticTarget {
    std::uint32_t range_bin = 0;
    std::uint32_t doppler_bin = 0; // consolidated index
    float azimuth = 0.0f;
    float elevation = 0.0f;
    std::complex<double> amplitude{1.0, 0.0};
};

struct Scene {
    std::vector<SyntheticTarget> targets;
    double noise_sigma = 0.0; // complex std dev per sample; 0 = noiseless
    std::uint64_t seed = 0;
    ArrayGeometry geometry;
    std::optional<RadarConfig> config; // optional embedded radar config
};

/// Scene JSON:
///   { "targets": [{"r","l","az","el","amp_re","amp_im"}...],
///     "noise_sigma": s, "seed": n, "geometry": [[x,y,z]...],
///     "config": {...}? }
Scene load_scene(const std::string& path);
void save_scene(const Scene& scene, const std::string& path);

/// Unit-modulus steering phasors exp(i * 2*pi * (p_n . u)) for every element.
std::vector<std::complex<double>> steering_vector(const ArrayGeometry& geometry,
                                                  float azimuth, float elevation);

/// Conjugate-steering dictionary on a uniform angular grid over the field of
/// view (endpoints inclusive; a single-bin axis uses the midpoint). Rows match
/// the replica-major snapshot order of `geometry`.
BeamformingDictionary build_dictionary(const ArrayGeometry& geometry,
                                       std::uint32_t n_az, std::uint32_t n_el,
                                       double az_lo, double az_hi,
                                       double el_lo, double el_hi);

/// Renders a frame: each target deposits amplitude * steering phasor at every
/// (channel, replica bin) of its cell, so a snapshot at the cell returns
/// exactly amplitude * steering. Overlapping targets sum coherently in target
/// order. Circular complex Gaussian noise of std noise_sigma is added per
/// sample from the counter-based stream; output is bit-identical per seed
/// regardless of thread count.
RdFrame render_frame(const Scene& scene, const RadarConfig& config, const TxCodeMap& map);

} // namespace spc
