// Copyright 2026 The SRGT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SRGT_KERNELS_HPP_
#define SRGT_KERNELS_HPP_

#include <cstddef>
#include <cstdint>

namespace srgt::kernels {

// A multivariate polynomial in monomial form:
//   f(x) = sum_m weights[m] * prod_v x_v^{exponents[m * num_vars + v]}
// This is the inner loop of every grid sweep in the mixed-strategy solver.
struct PolyView {
  const double* weights;
  const std::uint8_t* exponents;  // row-major, num_monomials x num_vars
  std::size_t num_monomials;
  std::size_t num_vars;
};

// Evaluates `poly` at `count` points. `xs` is structure-of-arrays:
// xs[v * count + k] is coordinate v of point k. Results go to out[k].
//
// All variants perform the identical sequence of IEEE multiplies and adds
// per point (powers by repeated multiplication, monomials accumulated in
// order), so their outputs are bit-identical and runtime dispatch cannot
// change any result.
using BatchEvalFn = void (*)(const PolyView& poly, const double* xs,
                             std::size_t count, double* out);

void eval_batch_scalar(const PolyView& poly, const double* xs,
                       std::size_t count, double* out);

#if defined(__x86_64__)
// 4 points per iteration via AVX2. Callable only on CPUs with AVX2.
void eval_batch_avx2(const PolyView& poly, const double* xs, std::size_t count,
                     double* out);
#endif

// The variant selected for this machine (AVX2 when the CPU supports it,
// scalar otherwise). Set SRGT_DISABLE_AVX2=1 to force the scalar kernel.
BatchEvalFn active_batch_eval();
const char* active_batch_eval_name();

// Dispatched convenience wrapper.
inline void eval_batch(const PolyView& poly, const double* xs,
                       std::size_t count, double* out) {
  active_batch_eval()(poly, xs, count, out);
}

}  // namespace srgt::kernels

#endif  // SRGT_KERNELS_HPP_
