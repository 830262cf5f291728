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

#include "qpc/kernels.hpp"

namespace qpc::kernels::scalar {

// Real and imaginary parts are accumulated separately so the summation order
// matches the lane-wise order of the vector variants as closely as possible.

cplx dotu(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

double quadratic_form(const cplx* a, const cplx* y, std::size_t m) {
  double total = 0.0;
  for (std::size_t b = 0; b < m; ++b) {
    const cplx column = dotu(y, a + b * m, m);
    // Re(column * conj(y_b))
    total += column.real() * y[b].real() + column.imag() * y[b].imag();
  }
  return total;
}

const KernelTable& table() noexcept {
  static const KernelTable t{"scalar", &dotu, &dotc, &quadratic_form};
  return t;
}

}  // namespace qpc::kernels::scalar
