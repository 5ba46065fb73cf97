#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace boxlab {

// Exact scalar backend. Arbitrary precision keeps simplex pivoting and
// long mixture chains overflow-free.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class S>
inline S abs_val(const S& v) {
  return v < S(0) ? S(-v) : v;
}

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.template convert_to<double>(); }

// Default validity tolerance per backend: exact for rationals, 1e-9 for
// floats (loose enough for sqrt(2) arithmetic).
template <class S>
struct default_tol;
template <>
struct default_tol<double> {
  static double value() { return 1e-9; }
};
template <>
struct default_tol<Rational> {
  static Rational value() { return Rational(0); }
};

// "num/den" (or plain integer) parsing for the JSON box format.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& v);

// Best rational approximation of v within eps, by continued fractions.
Rational rationalize(double v, double eps = 1e-12);

// Deterministic random stream. mt19937_64 has a standard-specified
// sequence; uniform/normal are derived from raw bits directly so results
// do not depend on library distribution internals.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  // uniform in {0, ..., n-1}
  std::uint64_t below(std::uint64_t n) { return bits() % n; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0,1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Decorrelated per-restart / per-sample seed derivation.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace boxlab
