#ifndef MOEAD_CORE_HPP_
#define MOEAD_CORE_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace moead {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;
using IVec = std::vector<int>;
using IMat = std::vector<IVec>;

/// Deterministic random stream shared by all stochastic components.
///
/// Doubles are derived directly from the raw 64-bit engine output instead of
/// going through the standard distributions, whose algorithms are
/// implementation-defined. Draw order is documented per component: the engine
/// consumes draws in the order decomposition -> variation stack (operators in
/// declared order, rows in ascending index) -> update -> constraint handling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform double in (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }

  /// Uniform integer in {0, ..., n-1}.
  int uniform_int(int n) {
    if (n <= 0) throw std::invalid_argument("uniform_int: n must be positive");
    int k = static_cast<int>(uniform() * n);
    return k < n ? k : n - 1;
  }

  /// Normal deviate via the Marsaglia polar method.
  double normal(double mean, double sd) {
    if (have_spare_) {
      have_spare_ = false;
      return mean + sd * spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return mean + sd * u * m;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline std::size_t nrows(const Mat& m) { return m.size(); }
inline std::size_t ncols(const Mat& m) { return m.empty() ? 0 : m.front().size(); }

inline double squared_distance(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    s += d * d;
  }
  return s;
}

inline double norm2(const Vec& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

inline bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace moead

#endif  // MOEAD_CORE_HPP_
