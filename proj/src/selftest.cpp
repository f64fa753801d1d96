// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/selftest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "belltet/channels.hpp"
#include "belltet/geometry.hpp"
#include "belltet/io.hpp"
#include "belltet/kernels.hpp"
#include "belltet/levelset.hpp"
#include "belltet/measures.hpp"
#include "belltet/oracles.hpp"
#include "belltet/ordering.hpp"
#include "belltet/state.hpp"

namespace belltet {
namespace {

std::string fmt(double v) { return io::format_double(v); }

// Same explicit mapping as StateSampler: top 53 bits, centered in the cell.
double unit_from(std::mt19937_64& engine) {
    return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

void check_state_roundtrip(SelftestReport& report, std::uint64_t seed) {
    double worst = 0.0;
    for (const BellDiagonalState& s : random_states(seed, 200)) {
        const BellDiagonalState back = from_density_matrix(density_matrix(s));
        worst = std::max({worst, std::abs(back.c1 - s.c1),
                          std::abs(back.c2 - s.c2), std::abs(back.c3 - s.c3)});
    }
    report.checks.push_back({"state_density_roundtrip", worst < 1e-12,
                             "max coordinate error " + fmt(worst)});
}

void check_coherence_oracles(SelftestReport& report, std::uint64_t seed) {
    double worst_l1 = 0.0;
    double worst_re = 0.0;
    for (const BellDiagonalState& s : random_states(seed + 1, 500)) {
        const DensityMatrix rho = density_matrix(s);
        const MeasureSet m = measure_all(s);
        worst_l1 = std::max(worst_l1,
                            std::abs(m.c_l1 - oracle::coherence_l1_oracle(rho)));
        worst_re = std::max(
            worst_re, std::abs(m.c_re - oracle::coherence_rel_entropy_oracle(rho)));
    }
    report.checks.push_back({"coherence_closed_vs_oracle",
                             worst_l1 < 1e-12 && worst_re < 1e-10,
                             "max gaps l1 " + fmt(worst_l1) + ", re " + fmt(worst_re)});
}

void check_discord_oracle(SelftestReport& report, std::uint64_t seed) {
    double worst = 0.0;
    for (const BellDiagonalState& s : random_states(seed + 2, 20)) {
        const double closed = evaluate_measure(Measure::discord, s);
        const double grid = oracle::discord_oracle(density_matrix(s), 96);
        worst = std::max(worst, std::abs(closed - grid));
    }
    report.checks.push_back(
        {"discord_closed_vs_oracle", worst < 2e-3, "max gap " + fmt(worst)});
}

void check_axis_discord_zero(SelftestReport& report) {
    double worst_closed = 0.0;
    double worst_oracle = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int axis = i % 3;
        const double sign = (i / 3) % 2 == 0 ? 1.0 : -1.0;
        const double t = 0.1 * (1 + i / 6);
        const double c1 = axis == 0 ? sign * t : 0.0;
        const double c2 = axis == 1 ? sign * t : 0.0;
        const double c3 = axis == 2 ? sign * t : 0.0;
        const BellDiagonalState s = new_state(c1, c2, c3);
        worst_closed =
            std::max(worst_closed, std::abs(evaluate_measure(Measure::discord, s)));
        worst_oracle = std::max(
            worst_oracle, std::abs(oracle::discord_oracle(density_matrix(s), 96)));
    }
    report.checks.push_back({"axis_states_zero_discord",
                             worst_closed < 1e-12 && worst_oracle < 1e-12,
                             "max closed " + fmt(worst_closed) + ", oracle " +
                                 fmt(worst_oracle)});
}

void check_geo_oracle(SelftestReport& report, std::uint64_t seed) {
    double worst = 0.0;
    for (const BellDiagonalState& s : random_states(seed + 3, 20)) {
        const double closed = evaluate_measure(Measure::geo_discord, s);
        const double oracle_value =
            oracle::geometric_discord_oracle(density_matrix(s), 64);
        worst = std::max(worst, std::abs(closed - oracle_value));
    }
    report.checks.push_back(
        {"geo_discord_closed_vs_oracle", worst < 1e-3, "max gap " + fmt(worst)});
}

void check_kernel_equivalence(SelftestReport& report, std::uint64_t seed) {
    std::vector<BellDiagonalState> states = random_states(seed + 4, 2048);
    // Axis, vertex, and face points exercise the zero-eigenvalue paths.
    states.push_back(new_state(0.5, 0.0, 0.0));
    states.push_back(new_state(0.0, 0.7, 0.0));
    states.push_back(new_state(0.0, 0.0, -0.9));
    states.push_back(new_state(1.0, 1.0, -1.0));
    states.push_back(new_state(0.5, 0.5, 0.0));
    states.push_back(new_state(0.0, 0.0, 0.0));
    states.push_back(new_state(-0.25, 0.125, 0.0625));
    const std::size_t n = states.size();
    std::vector<double> c1(n), c2(n), c3(n), ref(n), alt(n);
    for (std::size_t i = 0; i < n; ++i) {
        c1[i] = states[i].c1;
        c2[i] = states[i].c2;
        c3[i] = states[i].c3;
    }
    const kernels::Backend backend = kernels::active();
    bool ok = true;
    std::string detail = std::string("active backend ") + kernels::backend_name(backend);
    for (const Measure m : kAllMeasures) {
        kernels::evaluate_with(kernels::Backend::scalar, m, c1, c2, c3, ref);
        kernels::evaluate_with(backend, m, c1, c2, c3, alt);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double scale = std::max(1.0, std::abs(ref[i]));
            worst = std::max(worst, std::abs(alt[i] - ref[i]) / scale);
        }
        const bool exact = m == Measure::c_l1 || m == Measure::geo_discord;
        const double tol = exact ? 0.0 : 1e-13;
        if (worst > tol) {
            ok = false;
        }
        detail += std::string("; ") + measure_name(m) + " " + fmt(worst);
    }
    report.checks.push_back({"kernel_backend_equivalence", ok, detail});
}

void check_channel_trace_preservation(SelftestReport& report,
                                      bool unnormalized) {
    bool ok = true;
    std::string detail;
    const std::array<double, 5> qs{0.05, 0.1, 0.2, 0.25, 0.3};
    for (const double q : qs) {
        const KrausChannel dep =
            unnormalized ? depolarizing_A_unnormalized(q) : depolarizing_A(q);
        if (!is_trace_preserving(dep)) {
            ok = false;
            detail = dep.label + " fails at q " + fmt(q);
            break;
        }
    }
    if (ok) {
        for (const double q : {0.1, 0.5, 0.9}) {
            for (const PhaseFlipTarget target :
                 {PhaseFlipTarget::A, PhaseFlipTarget::B, PhaseFlipTarget::both}) {
                if (!is_trace_preserving(phase_flip(q, target))) {
                    ok = false;
                    detail = "phase flip fails at q " + fmt(q);
                }
            }
        }
    }
    if (ok) {
        detail = "all channels trace preserving";
    }
    report.checks.push_back({"channel_trace_preservation", ok, detail});
}

void check_channel_closed_form(SelftestReport& report, std::uint64_t seed) {
    double worst = 0.0;
    const std::array<double, 5> qs{0.1, 0.3, 0.5, 0.7, 0.9};
    for (const BellDiagonalState& s : random_states(seed + 5, 50)) {
        const DensityMatrix rho = density_matrix(s);
        for (const double q : qs) {
            for (const ChannelFamily family :
                 {ChannelFamily::depolarizing_A, ChannelFamily::phase_flip_both}) {
                const KrausChannel ch = family == ChannelFamily::depolarizing_A
                                            ? depolarizing_A(q)
                                            : phase_flip(q, PhaseFlipTarget::both);
                const BellDiagonalState kraus =
                    from_density_matrix(apply_channel(rho, ch));
                const BellDiagonalState closed =
                    apply_shrink(s, channel_shrink(family, q));
                worst = std::max({worst, std::abs(kraus.c1 - closed.c1),
                                  std::abs(kraus.c2 - closed.c2),
                                  std::abs(kraus.c3 - closed.c3)});
            }
        }
    }
    report.checks.push_back(
        {"channel_closed_form_match", worst < 1e-10, "max gap " + fmt(worst)});
}

void check_channel_incoherence(SelftestReport& report) {
    bool ok = is_incoherent_channel(depolarizing_A(0.3));
    for (const PhaseFlipTarget target :
         {PhaseFlipTarget::A, PhaseFlipTarget::B, PhaseFlipTarget::both}) {
        ok = ok && is_incoherent_channel(phase_flip(0.4, target));
    }
    report.checks.push_back({"channel_incoherence", ok,
                             ok ? "all channels incoherent"
                                : "an incoherent-channel check failed"});
}

void check_noise_monotonicity(SelftestReport& report, std::uint64_t seed) {
    int ascents = 0;
    const std::array<double, 9> qs{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    for (const BellDiagonalState& s : random_states(seed + 6, 100)) {
        for (const ChannelFamily family :
             {ChannelFamily::depolarizing_A, ChannelFamily::phase_flip_both}) {
            double prev_l1 = evaluate_measure(Measure::c_l1, s);
            double prev_re = evaluate_measure(Measure::c_re, s);
            for (const double q : qs) {
                const BellDiagonalState sq =
                    apply_shrink(s, channel_shrink(family, q));
                const double l1 = evaluate_measure(Measure::c_l1, sq);
                const double re = evaluate_measure(Measure::c_re, sq);
                if (l1 > prev_l1 + 1e-10 || re > prev_re + 1e-10) {
                    ++ascents;
                }
                prev_l1 = l1;
                prev_re = re;
            }
        }
    }
    report.checks.push_back({"coherence_monotone_under_noise", ascents == 0,
                             std::to_string(ascents) + " ascents"});
}

void check_ordering_counterexample(SelftestReport& report, std::uint64_t seed) {
    const OrderingVerdict v =
        find_counterexample(Measure::c_l1, Measure::c_re, 2000, seed);
    bool ok = !v.same_ordering && v.counterexample.has_value();
    if (ok) {
        // The returned pair must be equal under A and split under B.
        ok = std::abs(v.values[0] - v.values[1]) < kOrderingEqualTol &&
             std::abs(v.values[2] - v.values[3]) > kOrderingUnequalTol;
    }
    report.checks.push_back({"ordering_counterexample_found", ok,
                             ok ? "pair found with B split " +
                                      fmt(std::abs(v.values[2] - v.values[3]))
                                : "no counterexample found"});
}

void check_sequence_descent(SelftestReport& report, std::uint64_t seed) {
    const SortedSequenceReport scan = sequence_scan(
        Measure::c_l1, Measure::c_re, random_states(seed + 7, 300));
    const bool ok = !scan.violations.empty();
    report.checks.push_back({"sequence_scan_descent_found", ok,
                             std::to_string(scan.violations.size()) + " descents"});
}

void check_ray_ordering(SelftestReport& report, std::uint64_t seed) {
    std::mt19937_64 engine(seed + 8);
    int failures = 0;
    for (int i = 0; i < 20; ++i) {
        std::array<double, 3> d{};
        double norm = 0.0;
        do {
            for (double& x : d) {
                x = 2.0 * unit_from(engine) - 1.0;
            }
            norm = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
        } while (norm < 1e-3);
        const Ray ray = new_ray(d);
        if (!ray_ordering_check(ray, Measure::c_l1, Measure::c_re, 64).same_ordering) {
            ++failures;
        }
        if (!ray_ordering_check(ray, Measure::discord, Measure::geo_discord, 64)
                 .same_ordering) {
            ++failures;
        }
    }
    report.checks.push_back({"ray_ordering_preserved", failures == 0,
                             std::to_string(failures) + " failing rays"});
}

void check_derivatives(SelftestReport& report, std::uint64_t seed) {
    std::mt19937_64 engine(seed + 9);
    double worst_rel = 0.0;
    double min_second = 1e300;
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
        const double m = 4.0 * unit_from(engine) - 2.0;
        const Ray ray = coherence_ray(m);
        const double c1_max = ray.t_max * ray.direction[0];
        const double c1 = (0.05 + 0.8 * unit_from(engine)) * c1_max;
        const double closed = cre_first_derivative(m, c1);
        const double plus = closed_form::coherence_rel_entropy(c1 + h, m * (c1 + h), 0.0);
        const double minus = closed_form::coherence_rel_entropy(c1 - h, m * (c1 - h), 0.0);
        const double central = (plus - minus) / (2.0 * h);
        worst_rel = std::max(
            worst_rel, std::abs(closed - central) / std::max(std::abs(closed), 1e-12));
        min_second = std::min(min_second, cre_second_derivative(m, c1));
    }
    report.checks.push_back({"coherence_derivative_consistency",
                             worst_rel < 1e-6 && min_second > 0.0,
                             "max rel err " + fmt(worst_rel) + ", min second " +
                                 fmt(min_second)});
}

void check_geo_piecewise(SelftestReport& report) {
    int mismatches = 0;
    const std::array<double, 10> slopes{0.2,  -0.7, 1.0, 1.5, -2.5,
                                        0.0,  3.0,  -1.0, 0.5, -0.3};
    for (const double m : slopes) {
        const Ray ray = geo_ray_slope(m);
        for (int i = 0; i < 16; ++i) {
            const double t = ray.t_max * i / 15.0;
            const BellDiagonalState s = ray_point(ray, t);
            if (geo_discord_ray_piecewise(ray, t) !=
                evaluate_measure(Measure::geo_discord, s)) {
                ++mismatches;
            }
        }
    }
    const std::array<std::array<double, 2>, 10> axes{{{1.0, 1.0},
                                                      {0.5, 0.2},
                                                      {-1.0, 0.3},
                                                      {2.0, -1.0},
                                                      {0.1, 0.9},
                                                      {-0.4, -0.6},
                                                      {1.2, 0.8},
                                                      {0.0, 0.5},
                                                      {3.0, 2.0},
                                                      {-2.0, -2.0}}};
    for (const auto& ab : axes) {
        const Ray ray = geo_ray_axis(ab[0], ab[1]);
        for (int i = 0; i < 16; ++i) {
            const double t = ray.t_max * i / 15.0;
            const BellDiagonalState s = ray_point(ray, t);
            if (geo_discord_ray_piecewise(ray, t) !=
                evaluate_measure(Measure::geo_discord, s)) {
                ++mismatches;
            }
        }
    }
    report.checks.push_back({"geo_piecewise_matches_closed_form", mismatches == 0,
                             std::to_string(mismatches) + " mismatches"});
}

void check_contours(SelftestReport& report) {
    const SliceField slice =
        sample_slice(Measure::c_l1, {201, 201}, {-1.0, -1.0}, {1.0, 1.0}, 0.0);
    const std::vector<Polyline> lines = contour_slice(slice, 0.5);
    bool ok = !lines.empty();
    double worst = 0.0;
    for (const Polyline& line : lines) {
        for (const auto& p : line.points) {
            worst = std::max(
                worst, std::abs(closed_form::coherence_l1(p[0], p[1]) - 0.5));
        }
    }
    ok = ok && worst < 0.02;
    const NestingCheck nesting = contour_nesting(slice, 0.2, 0.4, 32);
    ok = ok && nesting.violations == 0 && nesting.rays_compared >= 8 &&
         nesting.min_separation > 0.0;
    report.checks.push_back(
        {"contour_level_and_nesting", ok,
         "max level error " + fmt(worst) + ", nesting rays " +
             std::to_string(nesting.rays_compared) + ", violations " +
             std::to_string(nesting.violations)});
}

void check_isosurface(SelftestReport& report) {
    const ScalarField3 field =
        sample_field(Measure::discord, {41, 41, 41}, GridBounds3{});
    const IsosurfaceMesh mesh = isosurface(field, 0.03);
    bool ok = !mesh.vertices.empty() && !mesh.triangles.empty();
    double worst_level = 0.0;
    double min_axis_dist = 1e300;
    for (const auto& v : mesh.vertices) {
        const BellDiagonalState s = new_state(v[0], v[1], v[2]);
        worst_level = std::max(
            worst_level, std::abs(evaluate_measure(Measure::discord, s) - 0.03));
        const double d1 = std::hypot(v[1], v[2]);
        const double d2 = std::hypot(v[0], v[2]);
        const double d3 = std::hypot(v[0], v[1]);
        min_axis_dist = std::min({min_axis_dist, d1, d2, d3});
    }
    ok = ok && worst_level < 0.02 && min_axis_dist >= 0.02;
    report.checks.push_back(
        {"isosurface_level_band_and_axis_exclusion", ok,
         std::to_string(mesh.vertices.size()) + " vertices, max level error " +
             fmt(worst_level) + ", min axis distance " + fmt(min_axis_dist)});
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
    SelftestReport report;
    report.seed = options.seed;
    check_state_roundtrip(report, options.seed);
    check_coherence_oracles(report, options.seed);
    check_discord_oracle(report, options.seed);
    check_axis_discord_zero(report);
    check_geo_oracle(report, options.seed);
    check_kernel_equivalence(report, options.seed);
    check_channel_trace_preservation(report, options.unnormalized_depolarizing);
    check_channel_closed_form(report, options.seed);
    check_channel_incoherence(report);
    check_noise_monotonicity(report, options.seed);
    check_ordering_counterexample(report, options.seed);
    check_sequence_descent(report, options.seed);
    check_ray_ordering(report, options.seed);
    check_derivatives(report, options.seed);
    check_geo_piecewise(report);
    check_contours(report);
    check_isosurface(report);
    report.all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                    [](const SelftestCheck& c) { return c.passed; });
    return report;
}

std::string selftest_json(const SelftestReport& report) {
    nlohmann::ordered_json doc;
    doc["seed"] = report.seed;
    doc["all_passed"] = report.all_passed;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const SelftestCheck& check : report.checks) {
        nlohmann::ordered_json entry;
        entry["name"] = check.name;
        entry["passed"] = check.passed;
        entry["detail"] = check.detail;
        checks.push_back(entry);
    }
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

}  // namespace belltet
