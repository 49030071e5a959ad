// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "spc/rd_frame.hpp"

namespace spc {

/// RD frame binary format "SPC1", little-endian:
///   magic "SPC1" | u32 n_rx | u32 n_range | u32 n_doppler | u32 n_tx_signatures
///   | f32 range_resolution | f32 doppler_resolution
///   | n_rx*n_range*n_doppler (f32 re, f32 im) pairs, row-major (c, r, d).
///
/// load_frame rejects bad magic, impossible dimensions, truncated or oversized
/// payloads, and non-finite samples, reporting the failing byte offset.
/// save -> load is bit-exact.
RdFrame load_frame(const std::string& path);
void save_frame(const RdFrame& frame, const std::string& path);

} // namespace spc
