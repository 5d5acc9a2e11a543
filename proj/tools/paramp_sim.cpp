// paramp-sim: scenario runner for the two-mode parametric amplifier library.
// Subcommands:
//   run <scenario.json>     execute a scenario file
//   preset <name>           execute a named preset from the presets directory
// Outputs CSV files plus a manifest.json with the resolved parameters.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "paramp/bell_portrait.hpp"
#include "paramp/covariance_evolution.hpp"
#include "paramp/entropy.hpp"
#include "paramp/tomography.hpp"
#include "paramp/version.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
using namespace paramp;

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct StateSpec {
    GaussianWavefunction state;
    bool squeezed = false;
    double r = 0.0;
};

struct Overrides {
    std::optional<int> grid_n;
    std::optional<double> grid_width;
    std::optional<int> t_steps;
};

struct Scenario {
    AmplifierParams params;
    StateSpec state;
    std::vector<double> times;
    json task;
    std::string prefix = "run";
    json resolved;
};

std::complex<double> parse_complex(const json& j, const char* what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw ConfigError(std::string(what) + ": expected number or [re, im]");
}

StateSpec parse_state(const json& j, double omega_b) {
    if (!j.is_object() || !j.contains("type"))
        throw ConfigError("state: expected an object with a \"type\" field");
    const std::string type = j.at("type").get<std::string>();
    StateSpec out;
    if (type == "squeezed") {
        if (j.contains("beta") == j.contains("r"))
            throw ConfigError("squeezed state: give exactly one of \"beta\" or \"r\"");
        out.r = j.contains("r") ? j.at("r").get<double>()
                                : squeeze_parameter_from_beta(j.at("beta").get<double>());
        out.squeezed = true;
        out.state = make_squeezed_vacuum(out.r, omega_b);
    } else if (type == "coherent") {
        out.state = make_coherent(parse_complex(j.at("alpha1"), "alpha1"),
                                  parse_complex(j.at("alpha2"), "alpha2"), omega_b);
    } else if (type == "general") {
        Eigen::Vector2cd b = Eigen::Vector2cd::Zero();
        if (j.contains("b")) {
            b(0) = parse_complex(j.at("b").at(0), "b[0]");
            b(1) = parse_complex(j.at("b").at(1), "b[1]");
        }
        out.state = make_general(j.at("a11").get<double>(), j.at("a12").get<double>(),
                                 j.at("a22").get<double>(), b);
    } else {
        throw ConfigError("state: unknown type \"" + type + "\"");
    }
    return out;
}

MeasurementFrame parse_frame(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(std::string(what) + ": expected [mu, nu]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Scenario parse_scenario(const json& j, const Overrides& ov) {
    Scenario sc;
    const json& amp = j.at("amplifier");
    sc.params.omega_a = amp.value("omega_a", 1.0);
    sc.params.omega_b = amp.at("omega_b").get<double>();
    sc.params.big_omega = amp.at("big_omega").get<double>();
    sc.params.k = amp.at("k").get<double>();
    sc.params.validate();
    const Regime regime = classify_regime(sc.params);

    sc.state = parse_state(j.at("state"), sc.params.omega_b);

    const json& time = j.at("time");
    const double start = time.value("start", 0.0);
    double end;
    if (time.contains("periods")) {
        if (regime.kind != RegimeKind::Trigonometric)
            throw ConfigError("time.periods requires the trigonometric regime");
        end = start + time.at("periods").get<double>() * M_PI / regime.rate;
    } else {
        end = time.at("end").get<double>();
    }
    if (!(end >= start)) throw ConfigError("time: end must be >= start");
    if (regime.kind == RegimeKind::Hyperbolic && end > 50.0)
        throw ConfigError("hyperbolic-regime runs are capped at t <= 50");
    int steps;
    if (ov.t_steps) {
        steps = *ov.t_steps;
    } else if (time.contains("steps")) {
        steps = time.at("steps").get<int>();
    } else if (regime.kind == RegimeKind::Trigonometric) {
        steps = std::max(2, static_cast<int>(std::lround(
                                200.0 * (end - start) / (M_PI / regime.rate))));
    } else {
        steps = 200;
    }
    if (steps < 1) throw ConfigError("time.steps must be >= 1");
    sc.times.resize(steps);
    for (int i = 0; i < steps; ++i)
        sc.times[i] = (steps == 1) ? start : start + (end - start) * i / (steps - 1.0);

    sc.task = j.at("task");
    if (!sc.task.contains("type")) throw ConfigError("task: missing \"type\"");
    if (j.contains("output")) sc.prefix = j.at("output").value("prefix", "run");

    sc.resolved = j;
    sc.resolved["time"] = {{"start", start}, {"end", end}, {"steps", steps}};
    sc.resolved["regime"] = {
        {"kind", regime.kind == RegimeKind::Trigonometric ? "trigonometric"
                 : regime.kind == RegimeKind::Hyperbolic  ? "hyperbolic"
                                                          : "degenerate"},
        {"rate", regime.rate}};
    return sc;
}

FrameQuad parse_frame_quad(const json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "table1_left") return table1_left_frames();
        if (name == "table1_right") return table1_right_frames();
        throw ConfigError("bell frames: unknown preset \"" + name + "\"");
    }
    if (j.is_array() && j.size() == 4)
        return {parse_frame(j[0], "frames[0]"), parse_frame(j[1], "frames[1]"),
                parse_frame(j[2], "frames[2]"), parse_frame(j[3], "frames[3]")};
    throw ConfigError("bell frames: expected preset name or [[mu,nu] x 4]");
}

// ---------------- tasks ----------------

std::vector<std::string> run_entropy(const Scenario& sc, const Overrides& ov,
                                     const fs::path& dir) {
    const int n = ov.grid_n.value_or(sc.task.value("grid_n", 64));
    const double sigmas = sc.task.value("grid_sigmas", 6.0);
    const bool analytic = sc.task.value("analytic", sc.state.squeezed);
    if (analytic && !sc.state.squeezed)
        throw ConfigError("entropy.analytic requires a squeezed state");

    const fs::path file = dir / (sc.prefix + "_entropy.csv");
    std::ofstream os(file);
    os << (analytic ? "t,S_L,S_VN,S_L_analytic,S_VN_analytic\n" : "t,S_L,S_VN\n");
    const GaussianMoments m0 = initial_moments(sc.state.state);
    for (double t : sc.times) {
        const GaussianMoments m =
            (t == 0.0) ? m0 : evolve_covariance(m0, t, sc.params);
        GridSpec grid = GridSpec::automatic(m, n, sigmas);
        if (ov.grid_width) grid.half_width = *ov.grid_width;
        else if (sc.task.contains("grid_width") && !sc.task.at("grid_width").is_null())
            grid.half_width = sc.task.at("grid_width").get<double>();
        const auto [sl, svn] =
            entropies(reduce_mode1(discretize_density(sc.state.state, t, sc.params, grid)));
        os << fmt(t) << ',' << fmt(sl) << ',' << fmt(svn);
        if (analytic) {
            const auto [al, av] = analytic_squeezed_entropies(t, sc.state.r, sc.params);
            os << ',' << fmt(al) << ',' << fmt(av);
        }
        os << '\n';
    }
    return {file.filename().string()};
}

std::vector<std::string> run_covariance(const Scenario& sc, const fs::path& dir) {
    const fs::path file = dir / (sc.prefix + "_covariance.csv");
    std::ofstream os(file);
    os << "t,mean_p1,mean_p2,mean_q1,mean_q2";
    const char* names[4] = {"p1", "p2", "q1", "q2"};
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) os << ",s_" << names[i] << names[j];
    os << ",det_sigma,N1_minus_N2\n";
    const GaussianMoments m0 = initial_moments(sc.state.state);
    for (double t : sc.times) {
        const GaussianMoments m = evolve_covariance(m0, t, sc.params);
        os << fmt(t);
        for (int i = 0; i < 4; ++i) os << ',' << fmt(m.mean(i));
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) os << ',' << fmt(m.cov(i, j));
        os << ',' << fmt(m.cov.determinant()) << ','
           << fmt(photon_number_difference(m, sc.params)) << '\n';
    }
    return {file.filename().string()};
}

std::vector<std::string> run_tomogram(const Scenario& sc, const fs::path& dir) {
    const MeasurementFrame f1 = parse_frame(sc.task.at("frames").at(0), "frames[0]");
    const MeasurementFrame f2 = parse_frame(sc.task.at("frames").at(1), "frames[1]");
    const int points = sc.task.value("grid_points", 201);
    const double span = sc.task.value("span_sigmas", 5.0);
    std::vector<double> times;
    if (sc.task.contains("times"))
        times = sc.task.at("times").get<std::vector<double>>();
    else
        times = sc.times;
    const GaussianMoments m0 = initial_moments(sc.state.state);
    std::vector<std::string> outputs;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const GaussianMoments m = evolve_covariance(m0, times[i], sc.params);
        const TomogramGaussian tg = symplectic_tomogram(m, f1, f2);
        const fs::path file =
            dir / (sc.prefix + "_tomogram_" + std::to_string(i) + ".csv");
        std::ofstream os(file);
        write_tomogram_csv(os, tg, points, span);
        outputs.push_back(file.filename().string());
    }
    return outputs;
}

std::vector<std::string> run_bell(const Scenario& sc, const fs::path& dir) {
    const json& fr = sc.task.at("frames");
    const bool both = fr.is_string() && fr.get<std::string>() == "both";
    const bool with_tilde = sc.task.value("with_tilde", false);
    if (both && with_tilde)
        throw ConfigError("bell: with_tilde supports a single frame set");

    const fs::path file = dir / (sc.prefix + "_bell.csv");
    std::ofstream os(file);
    const GaussianMoments m0 = initial_moments(sc.state.state);
    if (both) {
        os << "t,B_left,B_right\n";
        const FrameQuad left = table1_left_frames(), right = table1_right_frames();
        for (double t : sc.times) {
            const GaussianMoments m = evolve_covariance(m0, t, sc.params);
            os << fmt(t) << ',' << fmt(bell_parameter(build_M(m, left))) << ','
               << fmt(bell_parameter(build_M(m, right))) << '\n';
        }
    } else {
        const FrameQuad frames = parse_frame_quad(fr);
        os << (with_tilde ? "t,B,B_tilde,gap\n" : "t,B\n");
        for (double t : sc.times) {
            const GaussianMoments m = evolve_covariance(m0, t, sc.params);
            const double b = bell_parameter(build_M(m, frames));
            os << fmt(t) << ',' << fmt(b);
            if (with_tilde) {
                const double bt = b_tilde(m, frames);
                os << ',' << fmt(bt) << ',' << fmt(std::abs(b - bt));
            }
            os << '\n';
        }
    }
    return {file.filename().string()};
}

std::vector<std::string> run_nosignal(const Scenario& sc, const fs::path& dir) {
    std::array<MeasurementFrame, 4> frames = table2_frames();
    if (sc.task.contains("frames") && !sc.task.at("frames").is_string()) {
        const json& fr = sc.task.at("frames");
        if (!fr.is_array() || fr.size() != 4)
            throw ConfigError("nosignal frames: expected \"table2\" or [[mu,nu] x 4]");
        for (int i = 0; i < 4; ++i) frames[i] = parse_frame(fr[i], "frames[i]");
    }
    const fs::path file = dir / (sc.prefix + "_nosignal.csv");
    std::ofstream os(file);
    os << "t,B_nosignal\n";
    const GaussianMoments m0 = initial_moments(sc.state.state);
    for (double t : sc.times) {
        const GaussianMoments m = evolve_covariance(m0, t, sc.params);
        os << fmt(t) << ',' << fmt(nosignaling_bell(m, frames)) << '\n';
    }
    return {file.filename().string()};
}

int run_scenario(const json& doc, const Overrides& ov, const fs::path& out_dir) {
    const Scenario sc = parse_scenario(doc, ov);
    fs::create_directories(out_dir);
    const std::string type = sc.task.at("type").get<std::string>();
    std::vector<std::string> outputs;
    if (type == "entropy")
        outputs = run_entropy(sc, ov, out_dir);
    else if (type == "covariance")
        outputs = run_covariance(sc, out_dir);
    else if (type == "tomogram")
        outputs = run_tomogram(sc, out_dir);
    else if (type == "bell")
        outputs = run_bell(sc, out_dir);
    else if (type == "nosignal")
        outputs = run_nosignal(sc, out_dir);
    else
        throw ConfigError("task: unknown type \"" + type + "\"");

    json manifest;
    manifest["version"] = kVersion;
    manifest["scenario"] = sc.resolved;
    manifest["outputs"] = outputs;
    std::ofstream ms(out_dir / (sc.prefix + "_manifest.json"));
    ms << manifest.dump(2) << '\n';

    std::cout << "wrote " << outputs.size() << " output file(s) + manifest to "
              << out_dir.string() << '\n';
    for (const auto& f : outputs) std::cout << "  " << f << '\n';
    return 0;
}

fs::path find_presets_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PARAMP_PRESETS_DIR")) return env;
#ifdef PARAMP_PRESET_DIR
    if (fs::exists(PARAMP_PRESET_DIR)) return PARAMP_PRESET_DIR;
#endif
    return "presets";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-mode parametric amplifier simulator"};
    app.require_subcommand(1);

    std::string scenario_file, preset_name, out_dir = "out", presets_dir;
    Overrides ov;
    int grid_n = 0, t_steps = 0;
    double grid_width = 0.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
        cmd->add_option("--grid-n", grid_n, "override entropy grid points per axis");
        cmd->add_option("--grid-width", grid_width, "override entropy grid half-width");
        cmd->add_option("--t-steps", t_steps, "override number of time samples");
    };

    CLI::App* run = app.add_subcommand("run", "run a scenario file");
    run->add_option("scenario", scenario_file, "scenario JSON file")->required();
    add_common(run);

    CLI::App* preset = app.add_subcommand("preset", "run a named preset");
    preset->add_option("name", preset_name, "preset name, e.g. fig3")->required();
    preset->add_option("--presets-dir", presets_dir, "directory holding preset files");
    add_common(preset);

    CLI11_PARSE(app, argc, argv);

    if (grid_n > 0) ov.grid_n = grid_n;
    if (grid_width > 0.0) ov.grid_width = grid_width;
    if (t_steps > 0) ov.t_steps = t_steps;

    fs::path file;
    if (run->parsed()) {
        file = scenario_file;
    } else {
        file = find_presets_dir(presets_dir) / (preset_name + ".json");
    }

    try {
        std::ifstream is(file);
        if (!is) throw ConfigError("cannot open scenario file: " + file.string());
        json doc = json::parse(is);
        return run_scenario(doc, ov, out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: invalid scenario: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
