// Copyright 2026 The qpc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <immintrin.h>

#include "qpc/kernels.hpp"

// Compiled with -mavx2 -mfma. Nothing in here may run before the dispatcher
// has confirmed host support.

namespace qpc::kernels::avx2 {
namespace {

// Two complex numbers per register, interleaved [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sum of lanes with alternating signs: v0 - v1 + v2 - v3.
inline double hsum_alt(__m256d v) {
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  return hsum(_mm256_mul_pd(v, sign));
}

// For each complex pair accumulates straight = x*y lane-wise and
// crossed = x*swap(y) lane-wise. Tails are handled by the scalar code path.
struct Accumulators {
  __m256d straight = _mm256_setzero_pd();
  __m256d crossed = _mm256_setzero_pd();
};

inline std::size_t accumulate(const cplx* x, const cplx* y, std::size_t n, Accumulators& acc) {
  std::size_t i = 0;
  __m256d s1 = _mm256_setzero_pd(), c1 = _mm256_setzero_pd();
  for (; i + 4 <= n; i += 4) {
    const __m256d xv0 = load2(x + i), yv0 = load2(y + i);
    const __m256d xv1 = load2(x + i + 2), yv1 = load2(y + i + 2);
    acc.straight = _mm256_fmadd_pd(xv0, yv0, acc.straight);
    acc.crossed = _mm256_fmadd_pd(xv0, _mm256_permute_pd(yv0, 0b0101), acc.crossed);
    s1 = _mm256_fmadd_pd(xv1, yv1, s1);
    c1 = _mm256_fmadd_pd(xv1, _mm256_permute_pd(yv1, 0b0101), c1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i), yv = load2(y + i);
    acc.straight = _mm256_fmadd_pd(xv, yv, acc.straight);
    acc.crossed = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc.crossed);
  }
  acc.straight = _mm256_add_pd(acc.straight, s1);
  acc.crossed = _mm256_add_pd(acc.crossed, c1);
  return i;
}

}  // namespace

cplx dotu(const cplx* x, const cplx* y, std::size_t n) {
  Accumulators acc;
  const std::size_t done = accumulate(x, y, n, acc);
  // straight = [xr*yr, xi*yi, ...], crossed = [xr*yi, xi*yr, ...]
  double re = hsum_alt(acc.straight);
  double im = hsum(acc.crossed);
  for (std::size_t i = done; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
  Accumulators acc;
  const std::size_t done = accumulate(x, y, n, acc);
  double re = hsum(acc.straight);
  double im = hsum_alt(acc.crossed);
  for (std::size_t i = done; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double quadratic_form(const cplx* a, const cplx* y, std::size_t m) {
  double total = 0.0;
  for (std::size_t b = 0; b < m; ++b) {
    const cplx column = dotu(y, a + b * m, m);
    total += column.real() * y[b].real() + column.imag() * y[b].imag();
  }
  return total;
}

const KernelTable& table() noexcept {
  static const KernelTable t{"avx2", &dotu, &dotc, &quadratic_form};
  return t;
}

}  // namespace qpc::kernels::avx2
