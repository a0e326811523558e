#pragma once

#include <string>
#include <vector>

#include "schroalg/report.hpp"

namespace schroalg {

// Suites: lie, fock, diffreal, appell, evolution, probability.
std::vector<std::string> verify_suite_names();

VerifyReport verify_suite(const std::string& name);

// Every suite, in the canonical order.
std::vector<VerifyReport> verify_all();

}  // namespace schroalg
