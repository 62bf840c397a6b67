#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "jetzeta/ff_oracle.hpp"
#include "jetzeta/numeric.hpp"

namespace jetzeta {

/* Parsed invocation. Defaults: format=text, threads=1, budget=2e9,
 * eps=1e-6, order=4*N_1 (when left at -1). */
struct RunConfig {
    std::string command;
    std::vector<Int> generators;
    std::string format = "text"; // text | json | latex
    bool local = false;
    long m = -1;
    std::uint32_t q = 5;
    long order = -1;
    double eps = 1e-6;
    int threads = 1;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    int rand_g = 2;
    Int bound = Int(150);
};

/* Dispatches to the library. Exit status: 0 success, 1 invalid input or
 * usage, 2 verification mismatch. */
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace jetzeta
