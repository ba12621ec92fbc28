// elres: run one experiment from a YAML config and write CSV/JSON/SVG artifacts
// plus manifest.json into the output directory.
//
// exit status: 0 success, 1 usage or I/O error, 2 config error, 3 numeric failure

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "elres/version.hpp"
#include "output.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

int main(int argc, char** argv) {
    CLI::App app{"Elastic resonance and CALR experiments"};
    app.require_subcommand(1);
    std::string config, out = "out";
    int threads = 0;
    bool svg = false;
    auto add = [&](const char* name, const char* help, bool needs_config) {
        CLI::App* s = app.add_subcommand(name, help);
        auto* o = s->add_option("--config", config, "YAML config file");
        if (needs_config) o->required()->check(CLI::ExistingFile);
        s->add_option("--out", out, "output directory")->capture_default_str();
        s->add_option("--threads", threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
        s->add_flag("--svg", svg, "also write SVG plots");
        return s;
    };
    add("spectrum", "mode eigenvalues of the Neumann-Poincare operator", true);
    add("sweep", "no-core resonance sweep over the contrast", true);
    add("field", "displacement field on a grid", true);
    add("calr", "core-shell tuning and energy report", true);
    add("selfcheck", "special-function and layer-potential invariants", false);
    CLI11_PARSE(app, argc, argv);

    const std::string cmd = app.get_subcommands().front()->get_name();
    if (threads > 0) omp_set_num_threads(threads);

    cli::RunContext ctx;
    ctx.out_dir = out;
    ctx.svg = svg;
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) {
        std::fprintf(stderr, "elres: cannot create %s: %s\n", out.c_str(), ec.message().c_str());
        return 1;
    }

    const auto t0 = std::chrono::steady_clock::now();
    int status = 0;
    json diag = nullptr;
    try {
        if (cmd == "selfcheck") {
            if (!cli::run_selfcheck(ctx)) {
                status = 3;
                diag = {{"module", "selfcheck"}, {"message", "invariant check failed"}};
            }
        } else {
            const YAML::Node root = cli::load_file(config);
            if (cmd == "spectrum") cli::run_spectrum(root, ctx);
            else if (cmd == "sweep") cli::run_sweep(root, ctx);
            else if (cmd == "field") cli::run_field(root, ctx);
            else cli::run_calr(root, ctx);
        }
    } catch (const cli::ConfigError& e) {
        status = 2;
        std::fprintf(stderr, "elres: %s\n", e.located(config).c_str());
        diag = {{"module", "config"}, {"message", e.what()}, {"line", e.line}, {"column", e.column}};
    } catch (const cli::NumericFailure& e) {
        status = 3;
        std::fprintf(stderr, "elres: %s: %s\n", e.module.c_str(), e.what());
        diag = {{"module", e.module}, {"message", e.what()}};
    } catch (const std::exception& e) {
        status = 3;
        std::fprintf(stderr, "elres: %s\n", e.what());
        diag = {{"module", cmd}, {"message", e.what()}};
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const json manifest = {{"command", cmd},
                           {"status", status},
                           {"config", config},
                           {"config_sha256", config.empty() ? "" : cli::sha256_file(config)},
                           {"version", elres::kVersion},
                           {"threads", omp_get_max_threads()},
                           {"wall_time_s", wall},
                           {"outputs", ctx.outputs},
                           {"summary", ctx.summary},
                           {"diagnostic", diag}};
    std::ofstream(out + "/manifest.json") << manifest.dump(2) << "\n";
    return status;
}
