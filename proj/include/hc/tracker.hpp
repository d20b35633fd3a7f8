#pragma once

#include <functional>
#include <limits>

#include "hc/homotopy.hpp"

namespace hc {

struct TrackOptions {
    double newton_tol = 1e-10;
    unsigned max_corrector_iters = 3;
    double initial_step = 0.05;
    double min_step = 1e-14;
    double step_grow = 1.25;
    double divergence_norm = 1e8;
    double singular_cond = 1e12;
    double real_tol = 1e-6;
    unsigned max_steps = 10000;
};

enum class PathStatus { Success, Diverged, TrackingFailed, Singular };

const char* to_string(PathStatus s);

namespace detail {

// Counts live PathResult values, so streaming code can assert how many
// results are ever held simultaneously. Moves transfer the count.
class LiveTally {
  public:
    LiveTally();
    LiveTally(const LiveTally&);
    LiveTally(LiveTally&& o) noexcept;
    LiveTally& operator=(const LiveTally&);
    LiveTally& operator=(LiveTally&& o) noexcept;
    ~LiveTally();

    static long live();
    static long peak();
    static void reset_peak();

  private:
    bool active_ = true;
};

}  // namespace detail

// Outcome of continuing one start solution from t = 1 to t = 0.
struct PathResult {
    CVec start;
    CVec solution;
    PathStatus status = PathStatus::TrackingFailed;
    double t_reached = 1.0;
    double residual = std::numeric_limits<double>::infinity();
    double condition_estimate = std::numeric_limits<double>::infinity();
    unsigned steps_taken = 0;

    detail::LiveTally live_tally;
};

// Predictor-corrector continuation: Euler predictor on the Davidenko system
// dx/dt = -(dH/dx)^{-1} (dH/dt), full Newton corrector at fixed t, adaptive
// step length. Pure function of its arguments; repeated calls agree exactly.
PathResult track(const Homotopy& H, const CVec& start, const TrackOptions& opts = {});

bool is_success(const PathResult& r);
bool is_real(const PathResult& r, double tol = 1e-6);
bool is_nonsingular(const PathResult& r, double singular_cond = 1e12);

std::function<PathResult(const CVec&)> path_map(const Homotopy& H, const TrackOptions& opts = {});

}  // namespace hc
