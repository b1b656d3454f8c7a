#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qmc/config.hpp"

namespace qmc::cli {

enum class Format { Json, Csv };

struct RunOptions {
    ChannelConfig channel = default_channel_config();
    double t = 1.0;
    double t_max = 1.0;
    double dt = 0.1;
    Format format = Format::Json;
    std::string method = "closed";  ///< closed, exp or rk4
    std::vector<double> bloch{0.0, 0.0, 1.0};
    std::vector<double> rho;  ///< 8 numbers, row-major (re, im) pairs; overrides bloch
    std::size_t max_states = 4;
    std::size_t points = 200;
    std::vector<double> times{0.0, 0.5, 1.0};
};

// Each command renders its full output. Library errors propagate.
std::string cmd_show(const RunOptions& o);
std::string cmd_evolve(const RunOptions& o);
std::string cmd_ellipsoid(const RunOptions& o);
std::string cmd_kraus(const RunOptions& o);
std::string cmd_capacity(const RunOptions& o);
std::string cmd_entangle(const RunOptions& o);
std::string cmd_validate(const RunOptions& o);

/// Consistency checks behind `validate`; "ok" is false when any check fails.
nlohmann::json validation_report(const RunOptions& o);

/// Full command line: 0 on success, 1 for usage and config errors, 2 for
/// domain errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmc::cli
