#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include <lifespan/lifespan.hpp>

namespace fs = std::filesystem;
using namespace lifespan;

namespace {

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ConfigInvalid, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::ConfigInvalid, path + ": " + e.what());
    }
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream f(dir / name);
    if (!f) fail(ErrorKind::ConfigInvalid, "cannot write " + (dir / name).string());
    return f;
}

void write_json(const fs::path& dir, const std::string& name, const json& j) { open_out(dir, name) << j.dump(2) << '\n'; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Life-span bounds and blow-up simulations for du/dt = Lap u + |x|^l |u|^alpha u"};
    app.require_subcommand(1);
    std::string config, out = "out";
    int workers = int(std::max(1u, std::thread::hardware_concurrency()));
    std::uint64_t seed = 0;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config, "JSON configuration")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out, "output directory");
        sub->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "random seed");
    };
    auto* bounds = app.add_subcommand("bounds", "lower and upper life-span bounds for one datum");
    auto* simulate = app.add_subcommand("simulate", "evolve one datum until blow-up");
    auto* sweep = app.add_subcommand("sweep", "life-span sweep over the amplitude lambda");
    auto* kernel = app.add_subcommand("kernel-check", "weighted heat kernel decay rates");
    auto* scaling = app.add_subcommand("scaling-check", "scaling identities and limit structure");
    for (auto* s : {bounds, simulate, sweep, kernel, scaling}) common(s);
    CLI11_PARSE(app, argc, argv);

    try {
        const json j = load(config);
        const fs::path dir(out);
        if (*bounds) {
            const json r = run_bounds(j);
            write_json(dir, "bounds.json", r);
            std::cout << r.dump(2) << '\n';
            return 0;
        }
        if (*simulate) {
            const auto r = run_simulation(j);
            auto f = open_out(dir, "history.csv");
            write_history_csv(f, r.estimate.history);
            write_json(dir, "summary.json", r.summary);
            std::cout << r.summary.dump(2) << '\n';
            return 0;
        }
        if (*sweep) {
            const SweepConfig c = sweep_config_from_json(j);
            const SweepResult r = run_sweep(c, workers);
            auto f = open_out(dir, c.csv);
            write_sweep_csv(f, r);
            write_json(dir, c.summary, r.summary);
            write_sweep_csv(std::cout, r);
            std::cout << (r.pass ? "PASS" : "FAIL") << '\n';
            return r.pass ? 0 : 2;
        }
        if (*kernel) {
            const auto r = run_kernel_checks(j, workers);
            auto f = open_out(dir, "kernel.csv");
            write_kernel_csv(f, r);
            write_json(dir, "kernel_summary.json", r.summary);
            write_kernel_csv(std::cout, r);
            std::cout << (r.pass ? "PASS" : "FAIL") << '\n';
            return r.pass ? 0 : 2;
        }
        const auto r = run_scaling_checks(j, workers, seed);
        write_json(dir, "scaling_summary.json", r.report);
        std::cout << r.report.dump(2) << '\n';
        return r.pass ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
