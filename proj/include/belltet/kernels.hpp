// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstddef>
#include <span>

#include "belltet/measures.hpp"

namespace belltet::kernels {

// Batch measure evaluation over structure-of-arrays state batches. The scalar
// backend calls the closed forms from measures.hpp one state at a time; SIMD
// backends process several states per instruction. Selection happens once at
// first use: best backend the CPU supports, overridable with BELLTET_SIMD=
// {auto, scalar, avx2}.
enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);

// Compiled in and supported by this CPU.
bool available(Backend b);

// Backend used by evaluate(); resolves the environment override on first call.
Backend active();

// Test hook: pin the active backend. Throws std::invalid_argument if unavailable.
void force(Backend b);

// out[i] = measure(c1[i], c2[i], c3[i]). Spans must have equal length. States are
// assumed valid; no tetrahedron check happens here.
void evaluate(Measure m, std::span<const double> c1, std::span<const double> c2,
              std::span<const double> c3, std::span<double> out);

void evaluate_with(Backend b, Measure m, std::span<const double> c1, std::span<const double> c2,
                   std::span<const double> c3, std::span<double> out);

namespace detail {

// Reference kernels; SIMD backends must match their operation order. c_l1 and
// geo_discord are pure max/add/mul chains and must agree bitwise; the entropy
// kernels differ only through the vector log2 (<= 2e-13 relative).
void batch_c_l1_scalar(const double* c1, const double* c2, const double* c3, double* out,
                       std::size_t n);
void batch_c_re_scalar(const double* c1, const double* c2, const double* c3, double* out,
                       std::size_t n);
void batch_discord_scalar(const double* c1, const double* c2, const double* c3, double* out,
                          std::size_t n);
void batch_geo_scalar(const double* c1, const double* c2, const double* c3, double* out,
                      std::size_t n);

#if defined(BELLTET_BUILD_AVX2)
void batch_c_l1_avx2(const double* c1, const double* c2, const double* c3, double* out,
                     std::size_t n);
void batch_c_re_avx2(const double* c1, const double* c2, const double* c3, double* out,
                     std::size_t n);
void batch_discord_avx2(const double* c1, const double* c2, const double* c3, double* out,
                        std::size_t n);
void batch_geo_avx2(const double* c1, const double* c2, const double* c3, double* out,
                    std::size_t n);
#endif

}  // namespace detail
}  // namespace belltet::kernels
