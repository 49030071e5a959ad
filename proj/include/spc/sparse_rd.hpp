// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spc/cfar.hpp"
#include "spc/rd_frame.hpp"

namespace spc {

/// Sparse RD frame: keeps the samples of every channel at cells in S(tau) and
/// zeroes everything else. Config is unchanged; parallel over channels.
RdFrame mask_rd(const RdFrame& frame, const PeakSet& peaks);

} // namespace spc
