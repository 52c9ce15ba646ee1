#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "spinent/config.hpp"

namespace spinent {

/// Execute one resolved configuration, writing results under
/// config.output (two-qubit prints to `out` only). The output directory is
/// checked before any computation.
void run_experiment(const RunConfig& config, std::ostream& out);

/// Full command-line entry: returns 0 on success, 2 on usage errors and 1 on
/// numerical or I/O failures.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinent
