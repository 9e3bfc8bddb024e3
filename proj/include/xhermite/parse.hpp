#pragma once

#include <complex>
#include <string_view>

namespace xhermite {

// Locale-independent number parsing (std::from_chars); the whole string must
// be consumed. All throw ParseError.
double parse_double(std::string_view s);
int parse_int(std::string_view s);
/// "0.5", "0.6i", "-i", "0.3+0.2i", "1e-3-2i".
std::complex<double> parse_complex(std::string_view s);

}  // namespace xhermite
