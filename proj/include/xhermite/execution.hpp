#pragma once

namespace xhermite {

/// Selects the OpenMP kernel or its serial reference. Both produce the same
/// values; the serial path is kept for testing and benchmarking.
enum class Execution { serial, parallel };

}  // namespace xhermite
