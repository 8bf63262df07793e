#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>

namespace tact {

/// Runtime-precision float with expression templates off so `auto` stays safe.
using WideReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

inline constexpr int kDoubleBits = std::numeric_limits<double>::digits;

/// Sets the thread's default WideReal precision for the guard's lifetime.
class WidePrecisionScope {
 public:
  explicit WidePrecisionScope(int bits)
      : saved_(WideReal::default_precision()) {
    WideReal::default_precision(digits10_for_bits(bits));
  }
  ~WidePrecisionScope() { WideReal::default_precision(saved_); }
  WidePrecisionScope(const WidePrecisionScope&) = delete;
  WidePrecisionScope& operator=(const WidePrecisionScope&) = delete;

  static unsigned digits10_for_bits(int bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
  }

 private:
  unsigned saved_;
};

template <class Real>
struct RealTraits;

template <>
struct RealTraits<double> {
  static double epsilon() { return std::numeric_limits<double>::epsilon(); }
  static double to_double(double x) { return x; }
};

template <>
struct RealTraits<WideReal> {
  // Machine epsilon at the thread's current default precision.
  static WideReal epsilon() {
    const WideReal probe;
    const auto bits = static_cast<long>(mpfr_get_prec(probe.backend().data()));
    return ldexp(WideReal(1), static_cast<int>(1 - bits));
  }
  static double to_double(const WideReal& x) { return x.convert_to<double>(); }
};

}  // namespace tact
