#ifndef KNITFRAME_RANDOM_HPP
#define KNITFRAME_RANDOM_HPP

#include <cstdint>
#include <random>

#include "knitframe/types.hpp"

namespace knitframe {

// Reproducible draws: std::mt19937_64 output is fixed by the standard, the
// mapping to doubles below is fixed here, so a seed gives the same numbers
// on every platform.

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform_symmetric(Rng& rng) { return 2.0 * uniform01(rng) - 1.0; }

/// Entries with real and imaginary parts uniform on [-1, 1).
inline CVector random_complex_vector(Rng& rng, Index n) {
  CVector v(n);
  for (Index i = 0; i < n; ++i) {
    const double re = uniform_symmetric(rng);
    v(i) = Complex(re, uniform_symmetric(rng));
  }
  return v;
}

inline CMatrix random_complex_matrix(Rng& rng, Index rows, Index cols) {
  CMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) m.col(j) = random_complex_vector(rng, rows);
  return m;
}

}  // namespace knitframe

#endif  // KNITFRAME_RANDOM_HPP
