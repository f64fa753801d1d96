// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT
//
// Command-line front end.  One subcommand per invocation; all numeric output
// is machine-readable (JSON to stdout, CSV/OBJ to files) and byte-identical
// across identical invocations.  Exit codes: 0 success, 1 usage, 2 invalid
// state, 3 oracle gap, 4 ordering violation, 5 empty level set, 6 selftest
// failure.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "belltet/channels.hpp"
#include "belltet/errors.hpp"
#include "belltet/geometry.hpp"
#include "belltet/io.hpp"
#include "belltet/levelset.hpp"
#include "belltet/measures.hpp"
#include "belltet/oracles.hpp"
#include "belltet/ordering.hpp"
#include "belltet/selftest.hpp"
#include "belltet/state.hpp"

namespace {

using nlohmann::ordered_json;

// Output format (JSON, CSV, or mesh) follows the subcommand; n and dims of 0
// resolve to per-command defaults.
struct RunConfig {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    std::string measure = "discord";
    std::string measure_a;
    std::string measure_b;
    std::string channel = "depolarizing";
    std::string mode = "pairs";
    std::string direction;
    std::string out;
    double level = 0.03;
    double slice_c3 = 0.0;
    double gamma = 1.0;
    double t_max = 1.0;
    double tolerance = 0.0;  // 0 = the measure's default
    int steps = 50;
    int dims = 0;
    int grid_n = 96;
    int iterations = 256;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    bool unnormalized_depolarizing = false;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        belltet::io::write_text_file(out_path, text);
    }
}

ordered_json state_json(const belltet::BellDiagonalState& s) {
    ordered_json j;
    j["c1"] = s.c1;
    j["c2"] = s.c2;
    j["c3"] = s.c3;
    return j;
}

std::array<double, 3> parse_direction(const std::string& text) {
    std::array<double, 3> d{};
    char extra = 0;
    const int got = std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &d[0], &d[1],
                                &d[2], &extra);
    if (got != 3) {
        throw std::invalid_argument("--direction expects x,y,z");
    }
    return d;
}

double default_tolerance(belltet::Measure m) {
    switch (m) {
        case belltet::Measure::c_l1:
            return 1e-12;
        case belltet::Measure::c_re:
            return 1e-10;
        case belltet::Measure::discord:
            return 2e-3;
        case belltet::Measure::geo_discord:
            return 1e-3;
    }
    return 1e-10;
}

int cmd_measure(const RunConfig& cfg) {
    const belltet::BellDiagonalState s =
        belltet::new_state(cfg.c1, cfg.c2, cfg.c3);
    const belltet::MeasureSet m = belltet::measure_all(s);
    ordered_json j;
    j["c_l1"] = m.c_l1;
    j["c_re"] = m.c_re;
    j["discord"] = m.discord;
    j["geo_discord"] = m.geo_discord;
    emit(j.dump(2) + "\n", cfg.out);
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    const belltet::Measure measure = belltet::measure_from_name(cfg.measure);
    const belltet::BellDiagonalState s =
        belltet::new_state(cfg.c1, cfg.c2, cfg.c3);
    const belltet::DensityMatrix rho = belltet::density_matrix(s);
    const double closed = belltet::evaluate_measure(measure, s);
    double oracle_value = 0.0;
    switch (measure) {
        case belltet::Measure::c_l1:
            oracle_value = belltet::oracle::coherence_l1_oracle(rho);
            break;
        case belltet::Measure::c_re:
            oracle_value = belltet::oracle::coherence_rel_entropy_oracle(rho);
            break;
        case belltet::Measure::discord:
            oracle_value = belltet::oracle::discord_oracle(rho, cfg.grid_n);
            break;
        case belltet::Measure::geo_discord:
            oracle_value =
                belltet::oracle::geometric_discord_oracle(rho, cfg.iterations);
            break;
    }
    const double gap = std::abs(closed - oracle_value);
    const double tolerance =
        cfg.tolerance > 0.0 ? cfg.tolerance : default_tolerance(measure);
    ordered_json j;
    j["measure"] = belltet::measure_name(measure);
    j["closed_form"] = closed;
    j["oracle"] = oracle_value;
    j["gap"] = gap;
    j["tolerance"] = tolerance;
    emit(j.dump(2) + "\n", cfg.out);
    return gap <= tolerance ? 0 : 3;
}

int cmd_evolve(const RunConfig& cfg) {
    const belltet::BellDiagonalState s =
        belltet::new_state(cfg.c1, cfg.c2, cfg.c3);
    belltet::ChannelFamily family;
    if (cfg.channel == "depolarizing") {
        family = belltet::ChannelFamily::depolarizing_A;
    } else if (cfg.channel == "phaseflip") {
        family = belltet::ChannelFamily::phase_flip_both;
    } else {
        throw std::invalid_argument("--channel must be depolarizing or phaseflip");
    }
    const belltet::NoiseSchedule schedule =
        belltet::NoiseSchedule::uniform(cfg.gamma, cfg.t_max, cfg.steps);
    const belltet::Trajectory traj = belltet::trajectory(s, family, schedule);
    emit(belltet::io::trajectory_csv(traj), cfg.out);
    return 0;
}

ordered_json verdict_json(const belltet::OrderingVerdict& v) {
    ordered_json j;
    j["same_ordering"] = v.same_ordering;
    j["method"] = belltet::ordering_method_name(v.method);
    if (v.counterexample.has_value()) {
        ordered_json pair;
        pair["s1"] = state_json(v.counterexample->first);
        pair["s2"] = state_json(v.counterexample->second);
        j["counterexample"] = pair;
        ordered_json values;
        values["a_s1"] = v.values[0];
        values["a_s2"] = v.values[1];
        values["b_s1"] = v.values[2];
        values["b_s2"] = v.values[3];
        j["values"] = values;
    } else {
        j["counterexample"] = nullptr;
        j["values"] = nullptr;
    }
    return j;
}

int cmd_ordering(const RunConfig& cfg) {
    const belltet::Measure a = belltet::measure_from_name(cfg.measure_a);
    const belltet::Measure b = belltet::measure_from_name(cfg.measure_b);
    if (cfg.mode == "pairs") {
        const std::uint64_t n = cfg.n == 0 ? 10000 : cfg.n;
        const belltet::OrderingVerdict v = belltet::find_counterexample(
            a, b, static_cast<std::size_t>(n), cfg.seed);
        const std::string doc = verdict_json(v).dump(2) + "\n";
        std::fwrite(doc.data(), 1, doc.size(), stdout);
        if (!cfg.out.empty()) {
            belltet::io::write_text_file(cfg.out, doc);
        }
        return v.same_ordering ? 0 : 4;
    }
    if (cfg.mode == "sequence") {
        const std::uint64_t n = cfg.n == 0 ? 500 : cfg.n;
        const std::vector<belltet::BellDiagonalState> states =
            belltet::random_states(cfg.seed, static_cast<std::size_t>(n));
        const belltet::SortedSequenceReport report =
            belltet::sequence_scan(a, b, states);
        if (!cfg.out.empty()) {
            belltet::io::write_text_file(cfg.out,
                                         belltet::io::sequence_csv(report));
        }
        ordered_json j;
        j["same_ordering"] = report.violations.empty();
        j["method"] = "sequence_scan";
        j["n_states"] = report.states.size();
        j["n_violations"] = report.violations.size();
        if (report.violations.empty()) {
            j["first_violation"] = nullptr;
        } else {
            j["first_violation"] = report.violations.front();
        }
        const std::string doc = j.dump(2) + "\n";
        std::fwrite(doc.data(), 1, doc.size(), stdout);
        return report.violations.empty() ? 0 : 4;
    }
    // mode == "ray"
    const std::uint64_t n = cfg.n == 0 ? 64 : cfg.n;
    if (cfg.direction.empty()) {
        throw std::invalid_argument("--direction is required for --mode ray");
    }
    const belltet::Ray ray = belltet::new_ray(parse_direction(cfg.direction));
    const belltet::OrderingVerdict v = belltet::ray_ordering_check(
        ray, a, b, static_cast<std::size_t>(n));
    if (!cfg.out.empty()) {
        const std::vector<belltet::BellDiagonalState> samples =
            belltet::ray_states(ray, static_cast<int>(n));
        belltet::io::write_text_file(
            cfg.out,
            belltet::io::sequence_csv(belltet::sequence_scan(a, b, samples)));
    }
    const std::string doc = verdict_json(v).dump(2) + "\n";
    std::fwrite(doc.data(), 1, doc.size(), stdout);
    return v.same_ordering ? 0 : 4;
}

int cmd_contour(const RunConfig& cfg) {
    const belltet::Measure measure = belltet::measure_from_name(cfg.measure);
    const int dims = cfg.dims == 0 ? 201 : cfg.dims;
    const belltet::SliceField slice = belltet::sample_slice(
        measure, {dims, dims}, {-1.0, -1.0}, {1.0, 1.0}, cfg.slice_c3);
    const std::vector<belltet::Polyline> lines =
        belltet::contour_slice(slice, cfg.level);
    belltet::io::write_text_file(cfg.out, belltet::io::contour_csv(lines));
    std::size_t n_points = 0;
    for (const belltet::Polyline& line : lines) {
        n_points += line.points.size();
    }
    ordered_json j;
    j["measure"] = belltet::measure_name(measure);
    j["level"] = cfg.level;
    j["c3"] = cfg.slice_c3;
    j["dims"] = dims;
    j["n_polylines"] = lines.size();
    j["n_points"] = n_points;
    j["out"] = cfg.out;
    const std::string doc = j.dump(2) + "\n";
    std::fwrite(doc.data(), 1, doc.size(), stdout);
    return 0;
}

int cmd_isosurface(const RunConfig& cfg) {
    const belltet::Measure measure = belltet::measure_from_name(cfg.measure);
    const int dims = cfg.dims == 0 ? 81 : cfg.dims;
    const belltet::GridBounds3 bounds;
    const belltet::ScalarField3 field =
        belltet::sample_field(measure, {dims, dims, dims}, bounds);
    const belltet::IsosurfaceMesh mesh = belltet::isosurface(field, cfg.level);
    belltet::io::write_text_file(cfg.out, belltet::io::mesh_obj(mesh));
    ordered_json sidecar;
    sidecar["level"] = cfg.level;
    sidecar["dims"] = std::array<int, 3>{dims, dims, dims};
    ordered_json jbounds;
    jbounds["lo"] = bounds.lo;
    jbounds["hi"] = bounds.hi;
    sidecar["bounds"] = jbounds;
    sidecar["n_vertices"] = mesh.vertices.size();
    sidecar["n_triangles"] = mesh.triangles.size();
    belltet::io::write_text_file(cfg.out + ".json", sidecar.dump(2) + "\n");
    ordered_json summary = sidecar;
    summary["measure"] = belltet::measure_name(measure);
    summary["out"] = cfg.out;
    summary["sidecar"] = cfg.out + ".json";
    const std::string doc = summary.dump(2) + "\n";
    std::fwrite(doc.data(), 1, doc.size(), stdout);
    return 0;
}

int cmd_selftest(const RunConfig& cfg) {
    belltet::SelftestOptions options;
    options.seed = cfg.seed;
    options.unnormalized_depolarizing = cfg.unnormalized_depolarizing;
    const belltet::SelftestReport report = belltet::run_selftest(options);
    emit(belltet::selftest_json(report), cfg.out);
    return report.all_passed ? 0 : 6;
}

int run_mapped(const std::function<int()>& body) {
    try {
        return body();
    } catch (const belltet::OutsideTetrahedron& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const belltet::NotBellDiagonal& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const belltet::EmptyLevelSet& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 5;
    } catch (const belltet::NoConvergence& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bell-diagonal two-qubit measures, channels, ordering, and level sets"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* measure = app.add_subcommand(
        "measure", "Evaluate all four measures at one state");
    measure->add_option("--c1", cfg.c1)->required();
    measure->add_option("--c2", cfg.c2)->required();
    measure->add_option("--c3", cfg.c3)->required();

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Compare a closed form against its definition-based oracle");
    oracle->add_option("--c1", cfg.c1)->required();
    oracle->add_option("--c2", cfg.c2)->required();
    oracle->add_option("--c3", cfg.c3)->required();
    oracle->add_option("--measure", cfg.measure, "c_l1, c_re, discord, or geo_discord")
        ->required();
    oracle->add_option("--grid-n", cfg.grid_n, "Measurement-angle grid size");
    oracle->add_option("--iterations", cfg.iterations,
                       "Refinement budget for the geometric-discord oracle");
    oracle->add_option("--tolerance", cfg.tolerance,
                       "Gap tolerance override (0 = measure default)");

    CLI::App* evolve = app.add_subcommand(
        "evolve", "Trajectory of a state under an incoherent channel");
    evolve->add_option("--c1", cfg.c1)->required();
    evolve->add_option("--c2", cfg.c2)->required();
    evolve->add_option("--c3", cfg.c3)->required();
    evolve->add_option("--channel", cfg.channel, "depolarizing or phaseflip");
    evolve->add_option("--gamma", cfg.gamma, "Decay rate (positive)");
    evolve->add_option("--t-max", cfg.t_max, "Final time (positive)");
    evolve->add_option("--steps", cfg.steps, "Number of samples (at least 2)");
    evolve->add_option("--out", cfg.out, "CSV path (default stdout)");

    CLI::App* ordering = app.add_subcommand(
        "ordering", "Do two measures order states the same way?");
    ordering->add_option("--measure-a", cfg.measure_a)->required();
    ordering->add_option("--measure-b", cfg.measure_b)->required();
    ordering->add_option("--mode", cfg.mode, "pairs, sequence, or ray")
        ->check(CLI::IsMember({"pairs", "sequence", "ray"}));
    ordering->add_option("--n", cfg.n, "Samples (0 = mode default)");
    ordering->add_option("--seed", cfg.seed, "RNG seed");
    ordering->add_option("--direction", cfg.direction, "Ray direction x,y,z");
    ordering->add_option("--out", cfg.out,
                         "CSV path for sequence/ray scans, JSON for pairs");

    CLI::App* contour = app.add_subcommand(
        "contour", "Level contour of a measure on a fixed-c3 slice");
    contour->add_option("--measure", cfg.measure)->required();
    contour->add_option("--level", cfg.level, "Contour level");
    contour->add_option("--dims", cfg.dims, "Grid nodes per axis (0 = 201)");
    contour->add_option("--c3", cfg.slice_c3, "Slice plane");
    contour->add_option("--out", cfg.out, "CSV path")->required();

    CLI::App* isosurface = app.add_subcommand(
        "isosurface", "Level surface of a measure over the state tetrahedron");
    isosurface->add_option("--measure", cfg.measure)->required();
    isosurface->add_option("--level", cfg.level, "Surface level");
    isosurface->add_option("--dims", cfg.dims, "Grid nodes per axis (0 = 81)");
    isosurface->add_option("--out", cfg.out, "Mesh path (sidecar at <out>.json)")
        ->required();

    CLI::App* selftest = app.add_subcommand(
        "selftest", "Run the reduced invariant suite");
    selftest->add_option("--seed", cfg.seed, "RNG seed");
    selftest->add_flag("--unnormalized-depolarizing",
                       cfg.unnormalized_depolarizing,
                       "Use the unnormalized depolarizing weights (expected to fail)");
    selftest->add_option("--out", cfg.out, "JSON path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (measure->parsed()) return run_mapped([&] { return cmd_measure(cfg); });
    if (oracle->parsed()) return run_mapped([&] { return cmd_oracle(cfg); });
    if (evolve->parsed()) return run_mapped([&] { return cmd_evolve(cfg); });
    if (ordering->parsed()) return run_mapped([&] { return cmd_ordering(cfg); });
    if (contour->parsed()) return run_mapped([&] { return cmd_contour(cfg); });
    if (isosurface->parsed()) return run_mapped([&] { return cmd_isosurface(cfg); });
    if (selftest->parsed()) return run_mapped([&] { return cmd_selftest(cfg); });
    return 1;
}
