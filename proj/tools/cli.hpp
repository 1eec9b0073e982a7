#pragma once

#include <string>
#include <vector>

namespace spectra::cli {

// exit codes: 0 pass/success, 1 violation found (counterexample written),
// 2 usage error, 3 inconclusive (bound exhausted)
int run(const std::vector<std::string>& args);

} // namespace spectra::cli
