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

#ifndef QPC_KERNELS_HPP
#define QPC_KERNELS_HPP

// Data-parallel inner loops over interleaved complex<double> arrays.
//
// Every kernel has a portable scalar reference in `qpc::kernels::scalar` and,
// where the build supports it, an AVX2+FMA variant in `qpc::kernels::avx2`.
// Library code calls the free functions in `qpc::kernels`, which forward to
// the table chosen once at first use from the host CPU. Setting the
// environment variable QPC_SIMD=scalar before the first call pins the scalar
// table.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace qpc::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  // sum_i x_i * y_i
  cplx (*dotu)(const cplx* x, const cplx* y, std::size_t n);
  // sum_i conj(x_i) * y_i
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
  // Re sum_{a,b} y_a A(a,b) conj(y_b), A column-major m x m.
  double (*quadratic_form)(const cplx* a, const cplx* y, std::size_t m);
};

namespace scalar {
cplx dotu(const cplx* x, const cplx* y, std::size_t n);
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
double quadratic_form(const cplx* a, const cplx* y, std::size_t m);
const KernelTable& table() noexcept;
}  // namespace scalar

#if defined(QPC_HAVE_AVX2)
namespace avx2 {
cplx dotu(const cplx* x, const cplx* y, std::size_t n);
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
double quadratic_form(const cplx* a, const cplx* y, std::size_t m);
const KernelTable& table() noexcept;
}  // namespace avx2
#endif

/// True when the AVX2 variant was compiled in and the host supports it.
bool avx2_available() noexcept;

/// The dispatch table in use.
const KernelTable& active() noexcept;

inline cplx dotu(std::span<const cplx> x, std::span<const cplx> y) {
  return active().dotu(x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}
inline cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  return active().dotc(x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}
inline double quadratic_form(std::span<const cplx> a, std::span<const cplx> y) {
  return active().quadratic_form(a.data(), y.data(), y.size());
}

}  // namespace qpc::kernels

#endif  // QPC_KERNELS_HPP
