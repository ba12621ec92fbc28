#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "json.hpp"

namespace cli {

// A solver ran but produced no usable answer; maps to exit status 3.
struct NumericFailure : std::runtime_error {
    std::string module;
    NumericFailure(std::string mod, const std::string& msg) : std::runtime_error(msg), module(std::move(mod)) {}
};

struct RunContext {
    std::string out_dir;
    bool svg = false;
    std::vector<std::string> outputs;  // file names relative to out_dir
    nlohmann::json summary = nlohmann::json::object();

    std::string path(const std::string& name);  // registers name as an output
};

void run_spectrum(const YAML::Node& root, RunContext& ctx);
void run_sweep(const YAML::Node& root, RunContext& ctx);
void run_field(const YAML::Node& root, RunContext& ctx);
void run_calr(const YAML::Node& root, RunContext& ctx);
// Returns false when any invariant fails.
bool run_selfcheck(RunContext& ctx);

}  // namespace cli
