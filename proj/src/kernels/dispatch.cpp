// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace belltet::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(BELLTET_BUILD_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend resolve_from_env() {
    const char* env = std::getenv("BELLTET_SIMD");
    const std::string choice = env != nullptr ? env : "auto";
    if (choice == "scalar") return Backend::scalar;
    if (choice == "avx2") {
        if (!available(Backend::avx2)) {
            throw std::runtime_error("BELLTET_SIMD=avx2 but AVX2 is unavailable");
        }
        return Backend::avx2;
    }
    if (choice != "auto" && !choice.empty()) {
        throw std::runtime_error("BELLTET_SIMD='" + choice + "' not one of auto, scalar, avx2");
    }
    return available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<int> g_active{-1};

using KernelFn = void (*)(const double*, const double*, const double*, double*, std::size_t);

KernelFn kernel_for(Backend b, Measure m) {
    switch (b) {
#if defined(BELLTET_BUILD_AVX2)
        case Backend::avx2:
            switch (m) {
                case Measure::c_l1: return detail::batch_c_l1_avx2;
                case Measure::c_re: return detail::batch_c_re_avx2;
                case Measure::discord: return detail::batch_discord_avx2;
                case Measure::geo_discord: return detail::batch_geo_avx2;
            }
            break;
#else
        case Backend::avx2:
            break;
#endif
        case Backend::scalar:
            break;
    }
    switch (m) {
        case Measure::c_l1: return detail::batch_c_l1_scalar;
        case Measure::c_re: return detail::batch_c_re_scalar;
        case Measure::discord: return detail::batch_discord_scalar;
        case Measure::geo_discord: return detail::batch_geo_scalar;
    }
    return detail::batch_c_l1_scalar;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

bool available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

Backend active() {
    int cur = g_active.load(std::memory_order_acquire);
    if (cur < 0) {
        const Backend resolved = resolve_from_env();
        cur = static_cast<int>(resolved);
        g_active.store(cur, std::memory_order_release);
    }
    return static_cast<Backend>(cur);
}

void force(Backend b) {
    if (!available(b)) {
        throw std::invalid_argument(std::string(backend_name(b)) + " backend unavailable");
    }
    g_active.store(static_cast<int>(b), std::memory_order_release);
}

void evaluate_with(Backend b, Measure m, std::span<const double> c1, std::span<const double> c2,
                   std::span<const double> c3, std::span<double> out) {
    if (c1.size() != c2.size() || c1.size() != c3.size() || c1.size() != out.size()) {
        throw std::invalid_argument("kernel spans must have equal length");
    }
    if (!available(b)) {
        throw std::invalid_argument(std::string(backend_name(b)) + " backend unavailable");
    }
    kernel_for(b, m)(c1.data(), c2.data(), c3.data(), out.data(), c1.size());
}

void evaluate(Measure m, std::span<const double> c1, std::span<const double> c2,
              std::span<const double> c3, std::span<double> out) {
    evaluate_with(active(), m, c1, c2, c3, out);
}

}  // namespace belltet::kernels
