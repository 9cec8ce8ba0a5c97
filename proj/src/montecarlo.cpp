#include "exittime/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "exittime/error.hpp"
#include "exittime/philox.hpp"

namespace exittime {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInv32 = 1.0 / 4294967296.0;

// Standard normal pairs for one path. Philox block b of the path holds the
// normals for steps 2b and 2b + 1; blocks are converted kBatch at a time.
class PathNormals {
  public:
    static constexpr std::size_t kBatch = 32;

    PathNormals(std::uint64_t seed, std::uint64_t path)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          path_lo_(static_cast<std::uint32_t>(path)),
          path_hi_(static_cast<std::uint32_t>(path >> 32)) {}

    void next(double& g1, double& g2) {
        if (pos_ == 4 * kBatch) refill();
        g1 = buffer_[pos_];
        g2 = buffer_[pos_ + 1];
        pos_ += 2;
    }

  private:
    void refill() {
        std::uint32_t words[4 * kBatch];
        for (std::size_t b = 0; b < kBatch; ++b, ++block_) {
            const Philox4x32::Counter ctr{static_cast<std::uint32_t>(block_),
                                          static_cast<std::uint32_t>(block_ >> 32), path_lo_,
                                          path_hi_};
            const auto w = Philox4x32::generate(ctr, key_);
            std::copy(w.begin(), w.end(), words + 4 * b);
        }
        for (std::size_t pair = 0; pair < 2 * kBatch; ++pair) {
            const double u1 = (static_cast<double>(words[2 * pair]) + 0.5) * kInv32;
            const double u2 = (static_cast<double>(words[2 * pair + 1]) + 0.5) * kInv32;
            const double radius = std::sqrt(-2.0 * std::log(u1));
            // The angle only needs to be uniform; single precision is ample and
            // much cheaper than the correctly rounded double sincos.
            const float angle = static_cast<float>(kTwoPi * u2);
            buffer_[2 * pair] = radius * static_cast<double>(std::cos(angle));
            buffer_[2 * pair + 1] = radius * static_cast<double>(std::sin(angle));
        }
        pos_ = 0;
    }

    Philox4x32::Key key_;
    std::uint32_t path_lo_;
    std::uint32_t path_hi_;
    std::uint64_t block_ = 0;
    double buffer_[4 * kBatch] = {};
    std::size_t pos_ = 4 * kBatch;
};

struct PathOutcome {
    double time = 0.0;
    double time_fine = 0.0;
    bool censored = false;
};

std::size_t step_limit(double t_max, double dt) {
    return static_cast<std::size_t>(std::ceil(t_max / dt - 1e-9));
}

PathOutcome simulate_raw(const std::function<bool(Complex)>& contains, Complex start,
                         const MCConfig& cfg, std::uint64_t path) {
    PathNormals normals(cfg.seed, path);
    const double scale = std::sqrt(cfg.dt);
    const std::size_t max_steps = step_limit(cfg.t_max, cfg.dt);
    double x = start.real();
    double y = start.imag();
    for (std::size_t k = 0; k < max_steps; ++k) {
        double g1, g2;
        normals.next(g1, g2);
        x += scale * g1;
        y += scale * g2;
        if (!contains(Complex{x, y})) {
            return {static_cast<double>(k + 1) * cfg.dt, 0.0, false};
        }
    }
    return {cfg.t_max, 0.0, true};
}

// The coarse path is the fine path observed every fourth step.
PathOutcome simulate_two_level(const std::function<bool(Complex)>& contains, Complex start,
                               const MCConfig& cfg, std::uint64_t path) {
    PathNormals normals(cfg.seed, path);
    const double fine_dt = cfg.dt / 4.0;
    const double scale = std::sqrt(fine_dt);
    const std::size_t max_steps = 4 * step_limit(cfg.t_max, cfg.dt);
    double x = start.real();
    double y = start.imag();
    bool fine_done = false;
    bool coarse_done = false;
    PathOutcome out{cfg.t_max, cfg.t_max, false};
    for (std::size_t j = 0; j < max_steps && !(fine_done && coarse_done); ++j) {
        double g1, g2;
        normals.next(g1, g2);
        x += scale * g1;
        y += scale * g2;
        const bool on_coarse_grid = (j + 1) % 4 == 0;
        if (fine_done && !on_coarse_grid) continue;
        const bool inside = contains(Complex{x, y});
        if (!inside && !fine_done) {
            fine_done = true;
            out.time_fine = static_cast<double>(j + 1) * fine_dt;
        }
        if (!inside && on_coarse_grid && !coarse_done) {
            coarse_done = true;
            out.time = static_cast<double>((j + 1) / 4) * cfg.dt;
        }
    }
    out.censored = !coarse_done;
    return out;
}

struct Moments {
    double mean = 0.0;
    double std_error = 0.0;
};

Moments moments(const std::vector<PathOutcome>& outcomes, bool fine) {
    const double n = static_cast<double>(outcomes.size());
    double sum = 0.0;
    for (const auto& o : outcomes) sum += fine ? o.time_fine : o.time;
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto& o : outcomes) {
        const double d = (fine ? o.time_fine : o.time) - mean;
        ss += d * d;
    }
    const double variance = outcomes.size() > 1 ? ss / (n - 1.0) : 0.0;
    return {mean, std::sqrt(variance / n)};
}

}  // namespace

void MCConfig::validate() const {
    if (n_paths < 100) throw Error(ErrorKind::InvalidArgument, "n_paths must be at least 100");
    if (!(dt > 0.0)) throw Error(ErrorKind::InvalidArgument, "dt must be positive");
    if (!(t_max > dt)) throw Error(ErrorKind::InvalidArgument, "t_max must exceed dt");
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("EXITTIME_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

MCEstimate estimate_exit_time(const DomainSpec& domain, Complex start, const MCConfig& cfg) {
    cfg.validate();
    if (!domain.mc_eligible || !domain.contains) {
        throw Error(ErrorKind::IneligibleDomain,
                    domain.label() + " is not eligible for simulation (infinite expected "
                                     "exit time or no membership predicate)");
    }
    if (!domain.contains(start)) {
        std::ostringstream msg;
        msg << "start point " << start << " lies outside " << domain.label();
        throw Error(ErrorKind::StartOutsideDomain, msg.str());
    }

    std::vector<PathOutcome> outcomes(cfg.n_paths);
    const bool two_level = cfg.bias_mode == BiasMode::TwoLevel;
    const auto& contains = domain.contains;
    constexpr std::size_t kChunk = 256;
    std::atomic<std::size_t> next_chunk{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t begin = next_chunk.fetch_add(kChunk);
            if (begin >= cfg.n_paths) return;
            const std::size_t end = std::min(begin + kChunk, cfg.n_paths);
            for (std::size_t i = begin; i < end; ++i) {
                outcomes[i] = two_level ? simulate_two_level(contains, start, cfg, i)
                                        : simulate_raw(contains, start, cfg, i);
            }
        }
    };

    const unsigned requested = cfg.threads ? cfg.threads : default_thread_count();
    const unsigned n_threads =
        std::min<unsigned>(requested, static_cast<unsigned>((cfg.n_paths + kChunk - 1) / kChunk));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    MCEstimate est;
    const Moments coarse = moments(outcomes, false);
    est.mean = coarse.mean;
    est.std_error = coarse.std_error;
    est.n_paths = cfg.n_paths;
    est.n_censored = static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.censored; }));
    est.dt = cfg.dt;
    if (two_level) {
        const Moments fine = moments(outcomes, true);
        est.mean_fine = fine.mean;
        est.std_error_fine = fine.std_error;
    }
    return est;
}

MCEstimate estimate_wedge(double p, const MCConfig& cfg) {
    if (!(p > 0.0 && p < 0.5)) {
        std::ostringstream msg;
        msg << "wedge simulation needs 0 < p < 1/2 (got " << p
            << "); the expected exit time is infinite otherwise";
        throw Error(ErrorKind::IneligibleDomain, msg.str());
    }
    return estimate_exit_time(catalog::wedge(p), Complex{1.0, 0.0}, cfg);
}

}  // namespace exittime
