// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT
//
// AVX2 backend: four states per iteration. Arithmetic mirrors the scalar closed
// forms operation for operation; the only divergence is log2, computed here with
// the fdlibm/msun e_log2 reduction (|error| < 1 ulp), so entropy kernels track
// the scalar backend to ~1e-15 while c_l1/geo_discord match bitwise. No FMA:
// contraction would change rounding between backends.

#include "belltet/kernels.hpp"

#if defined(BELLTET_BUILD_AVX2)

#include <immintrin.h>

namespace belltet::kernels::detail {

namespace {

// Polynomial coefficients of the fdlibm log reduction R(z) on s = f/(2+f).
constexpr double kLg1 = 6.666666666666735130e-01;
constexpr double kLg2 = 3.999999999940941908e-01;
constexpr double kLg3 = 2.857142874366239149e-01;
constexpr double kLg4 = 2.222219843214978396e-01;
constexpr double kLg5 = 1.818357216161805012e-01;
constexpr double kLg6 = 1.531383769920937332e-01;
constexpr double kLg7 = 1.479819860511658591e-01;
// 1/ln2 split into a 32-bit-exact head and its tail.
constexpr double kInvLn2Hi = 1.44269504072144627571e+00;
constexpr double kInvLn2Lo = 1.67517131648865118353e-10;

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

// Exact for |v| < 2^51: shift into the double mantissa with the 1.5*2^52 trick.
inline __m256d int64_to_double(__m256i v) {
    const __m256d magic = set1(6755399441055744.0);  // 1.5 * 2^52
    v = _mm256_add_epi64(v, _mm256_castpd_si256(magic));
    return _mm256_sub_pd(_mm256_castsi256_pd(v), magic);
}

// log2 of strictly positive finite inputs (subnormals included).
inline __m256d log2_pd(__m256d x) {
    const __m256d one = set1(1.0);
    const __m256d half = set1(0.5);

    // Subnormal inputs: scale by 2^54 so the exponent field is usable.
    const __m256d tiny = _mm256_cmp_pd(x, set1(2.2250738585072014e-308), _CMP_LT_OQ);
    x = _mm256_blendv_pd(x, _mm256_mul_pd(x, set1(0x1.0p54)), tiny);
    const __m256i k_bias =
        _mm256_blendv_epi8(_mm256_setzero_si256(), _mm256_set1_epi64x(-54),
                           _mm256_castpd_si256(tiny));

    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i frac_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    const __m256i frac = _mm256_and_si256(bits, frac_mask);
    const __m256i biased_exp = _mm256_srli_epi64(_mm256_andnot_si256(
        _mm256_set1_epi64x(0x8000000000000000ULL), bits), 52);

    // Mantissa >= sqrt(2) rolls over into bit 52 after adding the sqrt(2)-1
    // fraction pattern; those lanes take exponent 0x3FE so m lands in
    // [sqrt(2)/2, sqrt(2)).
    const __m256i rollover = _mm256_and_si256(
        _mm256_srli_epi64(_mm256_add_epi64(frac, _mm256_set1_epi64x(0x00095F6400000000LL)), 52),
        _mm256_set1_epi64x(1));
    const __m256i k64 = _mm256_add_epi64(
        _mm256_add_epi64(_mm256_sub_epi64(biased_exp, _mm256_set1_epi64x(1023)), rollover),
        k_bias);
    const __m256i m_exp = _mm256_slli_epi64(_mm256_sub_epi64(_mm256_set1_epi64x(1023), rollover),
                                            52);
    const __m256d m = _mm256_castsi256_pd(_mm256_or_si256(frac, m_exp));

    const __m256d f = _mm256_sub_pd(m, one);
    const __m256d hfsq = _mm256_mul_pd(half, _mm256_mul_pd(f, f));
    const __m256d s = _mm256_div_pd(f, _mm256_add_pd(set1(2.0), f));
    const __m256d z = _mm256_mul_pd(s, s);
    const __m256d w = _mm256_mul_pd(z, z);
    const __m256d t1 = _mm256_mul_pd(
        w, _mm256_add_pd(set1(kLg2),
                         _mm256_mul_pd(w, _mm256_add_pd(set1(kLg4),
                                                        _mm256_mul_pd(w, set1(kLg6))))));
    const __m256d t2 = _mm256_mul_pd(
        z, _mm256_add_pd(
               set1(kLg1),
               _mm256_mul_pd(
                   w, _mm256_add_pd(set1(kLg3),
                                    _mm256_mul_pd(w, _mm256_add_pd(set1(kLg5),
                                                                   _mm256_mul_pd(w,
                                                                                 set1(kLg7))))))));
    const __m256d r = _mm256_mul_pd(s, _mm256_add_pd(hfsq, _mm256_add_pd(t2, t1)));

    // hi/lo split of log(m) = f - hfsq + r with hi's low 32 bits zeroed, then
    // the exact-product combination with 1/ln2 and the exponent.
    __m256d hi = _mm256_sub_pd(f, hfsq);
    hi = _mm256_castsi256_pd(_mm256_and_si256(_mm256_castpd_si256(hi),
                                              _mm256_set1_epi64x(0xFFFFFFFF00000000ULL)));
    const __m256d lo = _mm256_add_pd(_mm256_sub_pd(_mm256_sub_pd(f, hi), hfsq), r);

    const __m256d val_hi = _mm256_mul_pd(hi, set1(kInvLn2Hi));
    const __m256d val_lo = _mm256_add_pd(
        _mm256_mul_pd(_mm256_add_pd(lo, hi), set1(kInvLn2Lo)),
        _mm256_mul_pd(lo, set1(kInvLn2Hi)));

    const __m256d kd = int64_to_double(k64);
    const __m256d sum = _mm256_add_pd(kd, val_hi);
    const __m256d residue = _mm256_add_pd(_mm256_sub_pd(kd, sum), val_hi);
    return _mm256_add_pd(_mm256_add_pd(val_lo, residue), sum);
}

// p*log2(p) for p > 0, exact 0 otherwise (matches the scalar plog2p guard).
inline __m256d plog2p_pd(__m256d p) {
    const __m256d pos = _mm256_cmp_pd(p, _mm256_setzero_pd(), _CMP_GT_OQ);
    const __m256d safe = _mm256_blendv_pd(set1(1.0), p, pos);
    const __m256d term = _mm256_mul_pd(safe, log2_pd(safe));
    return _mm256_and_pd(term, pos);
}

inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(set1(-0.0), v);
}

// h - g(ref): same pairing and summation order as
// closed_form::relative_entropy_to_reference.
inline __m256d rel_entropy_pd(__m256d c1, __m256d c2, __m256d c3, __m256d ref) {
    const __m256d one = set1(1.0);
    const __m256d quarter = set1(0.25);
    const __m256d two = set1(2.0);

    const __m256d l00 = _mm256_mul_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_add_pd(one, c1), c2), c3), quarter);
    const __m256d l01 = _mm256_mul_pd(
        _mm256_sub_pd(_mm256_add_pd(_mm256_add_pd(one, c1), c2), c3), quarter);
    const __m256d l10 = _mm256_mul_pd(
        _mm256_add_pd(_mm256_add_pd(_mm256_sub_pd(one, c1), c2), c3), quarter);
    const __m256d l11 = _mm256_mul_pd(
        _mm256_sub_pd(_mm256_sub_pd(_mm256_sub_pd(one, c1), c2), c3), quarter);
    const __m256d h = _mm256_add_pd(_mm256_add_pd(plog2p_pd(l00), plog2p_pd(l10)),
                                    _mm256_add_pd(plog2p_pd(l01), plog2p_pd(l11)));

    const __m256d gp = plog2p_pd(_mm256_mul_pd(_mm256_add_pd(one, ref), quarter));
    const __m256d gm = plog2p_pd(_mm256_mul_pd(_mm256_sub_pd(one, ref), quarter));
    const __m256d g = _mm256_add_pd(_mm256_mul_pd(two, gp), _mm256_mul_pd(two, gm));
    return _mm256_sub_pd(h, g);
}

template <typename VecFn, typename ScalarFn>
void run_batch(const double* c1, const double* c2, const double* c3, double* out, std::size_t n,
               VecFn&& vec, ScalarFn&& tail) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v1 = _mm256_loadu_pd(c1 + i);
        const __m256d v2 = _mm256_loadu_pd(c2 + i);
        const __m256d v3 = _mm256_loadu_pd(c3 + i);
        _mm256_storeu_pd(out + i, vec(v1, v2, v3));
    }
    if (i < n) {
        tail(c1 + i, c2 + i, c3 + i, out + i, n - i);
    }
}

}  // namespace

void batch_c_l1_avx2(const double* c1, const double* c2, const double* c3, double* out,
                     std::size_t n) {
    run_batch(c1, c2, c3, out, n,
              [](__m256d v1, __m256d v2, __m256d) {
                  const __m256d d = abs_pd(_mm256_sub_pd(v1, v2));
                  const __m256d s = abs_pd(_mm256_add_pd(v1, v2));
                  return _mm256_mul_pd(set1(0.5), _mm256_add_pd(d, s));
              },
              batch_c_l1_scalar);
}

void batch_c_re_avx2(const double* c1, const double* c2, const double* c3, double* out,
                     std::size_t n) {
    run_batch(c1, c2, c3, out, n,
              [](__m256d v1, __m256d v2, __m256d v3) {
                  return rel_entropy_pd(v1, v2, v3, v3);
              },
              batch_c_re_scalar);
}

void batch_discord_avx2(const double* c1, const double* c2, const double* c3, double* out,
                        std::size_t n) {
    run_batch(c1, c2, c3, out, n,
              [](__m256d v1, __m256d v2, __m256d v3) {
                  const __m256d ref =
                      _mm256_max_pd(_mm256_max_pd(abs_pd(v1), abs_pd(v2)), abs_pd(v3));
                  return rel_entropy_pd(v1, v2, v3, ref);
              },
              batch_discord_scalar);
}

void batch_geo_avx2(const double* c1, const double* c2, const double* c3, double* out,
                    std::size_t n) {
    run_batch(c1, c2, c3, out, n,
              [](__m256d v1, __m256d v2, __m256d v3) {
                  const __m256d s1 = _mm256_mul_pd(v1, v1);
                  const __m256d s2 = _mm256_mul_pd(v2, v2);
                  const __m256d s3 = _mm256_mul_pd(v3, v3);
                  // First index attaining the max is dropped, like the scalar form.
                  const __m256d take0 = _mm256_and_pd(_mm256_cmp_pd(s1, s2, _CMP_GE_OQ),
                                                      _mm256_cmp_pd(s1, s3, _CMP_GE_OQ));
                  const __m256d take1 = _mm256_cmp_pd(s2, s3, _CMP_GE_OQ);
                  const __m256d pair12 = _mm256_add_pd(s1, s2);
                  const __m256d pair13 = _mm256_add_pd(s1, s3);
                  const __m256d pair23 = _mm256_add_pd(s2, s3);
                  const __m256d rest = _mm256_blendv_pd(pair12, pair13, take1);
                  return _mm256_mul_pd(set1(0.25), _mm256_blendv_pd(rest, pair23, take0));
              },
              batch_geo_scalar);
}

}  // namespace belltet::kernels::detail

#endif  // BELLTET_BUILD_AVX2
