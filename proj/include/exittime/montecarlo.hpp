#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "exittime/catalog.hpp"

namespace exittime {

enum class BiasMode {
    Raw,
    /// Also follows each path at dt/4 (same Brownian increments, finer grid)
    /// and reports both means.
    TwoLevel,
};

struct MCConfig {
    std::size_t n_paths = 100'000;
    double dt = 1e-4;
    double t_max = 100.0;
    std::uint64_t seed = 0;
    BiasMode bias_mode = BiasMode::Raw;
    /// Worker count; 0 means EXITTIME_THREADS or the hardware concurrency.
    unsigned threads = 0;

    void validate() const;
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n_paths = 0;
    std::size_t n_censored = 0;
    double dt = 0.0;
    std::optional<double> mean_fine;
    std::optional<double> std_error_fine;
};

/**
 * Euler simulation of planar Brownian motion from `start` until the first grid
 * time at which the path is outside `domain`. Paths still inside at t_max are
 * censored and contribute t_max. The normals for (seed, path, step) come from
 * a counter-based generator, so the result does not depend on thread count.
 *
 * Throws StartOutsideDomain or IneligibleDomain.
 */
MCEstimate estimate_exit_time(const DomainSpec& domain, Complex start, const MCConfig& cfg);

/// Wedge |Arg z| < pi p / 2 from z = 1; requires 0 < p < 1/2.
MCEstimate estimate_wedge(double p, const MCConfig& cfg);

/// Worker count used when MCConfig::threads is 0.
unsigned default_thread_count();

}  // namespace exittime
