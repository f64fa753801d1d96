// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/kernels.hpp"

namespace belltet::kernels::detail {

void batch_c_l1_scalar(const double* c1, const double* c2, const double* c3, double* out,
                       std::size_t n) {
    (void)c3;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = closed_form::coherence_l1(c1[i], c2[i]);
    }
}

void batch_c_re_scalar(const double* c1, const double* c2, const double* c3, double* out,
                       std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = closed_form::coherence_rel_entropy(c1[i], c2[i], c3[i]);
    }
}

void batch_discord_scalar(const double* c1, const double* c2, const double* c3, double* out,
                          std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = closed_form::discord(c1[i], c2[i], c3[i]);
    }
}

void batch_geo_scalar(const double* c1, const double* c2, const double* c3, double* out,
                      std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = closed_form::geo_discord(c1[i], c2[i], c3[i]);
    }
}

}  // namespace belltet::kernels::detail
