#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace jqb::cli {

/// 12 significant digits, the precision of every number the tool prints.
inline std::string fmt12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string fmt12(std::complex<double> z) {
  const double im = z.imag();
  return fmt12(z.real()) + (std::signbit(im) ? "-" : "+") + fmt12(std::abs(im)) + "i";
}

/// x rounded to 12 significant digits as a JSON number; null when not finite.
inline nlohmann::json json12(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(fmt12(x).c_str(), nullptr);
}

inline nlohmann::json json12(std::complex<double> z) { return {{"re", json12(z.real())}, {"im", json12(z.imag())}}; }

}  // namespace jqb::cli
