// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace spc {

/// SplitMix64 finalizer; full avalanche on 64-bit inputs.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based uniform draw in (0, 1]; a pure function of (seed, counter),
/// so streams are random-access and independent of evaluation order.
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t h = mix64(mix64(seed) + counter);
    return static_cast<double>((h >> 11) + 1) * 0x1.0p-53;
}

/// One standard complex Gaussian per counter via the Box-Muller pair
/// transform: components are i.i.d. N(0, 1), so E[|z|^2] = 2. A sample with
/// complex standard deviation sigma is (sigma / sqrt(2)) * z.
inline std::complex<double> counter_complex_gaussian(std::uint64_t seed,
                                                     std::uint64_t counter) {
    const double u1 = counter_uniform(seed, 2 * counter);
    const double u2 = counter_uniform(seed, 2 * counter + 1);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

} // namespace spc
