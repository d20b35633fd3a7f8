#include "hc/tracker.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace hc {

const char* to_string(PathStatus s) {
    switch (s) {
        case PathStatus::Success: return "success";
        case PathStatus::Diverged: return "diverged";
        case PathStatus::TrackingFailed: return "tracking_failed";
        case PathStatus::Singular: return "singular";
    }
    return "unknown";
}

namespace detail {

namespace {
std::atomic<long> g_live{0};
std::atomic<long> g_peak{0};

void tally_add() {
    const long v = ++g_live;
    long p = g_peak.load();
    while (v > p && !g_peak.compare_exchange_weak(p, v)) {
    }
}

void tally_remove() { --g_live; }
}  // namespace

LiveTally::LiveTally() { tally_add(); }
LiveTally::LiveTally(const LiveTally&) { tally_add(); }
LiveTally::LiveTally(LiveTally&& o) noexcept : active_(o.active_) { o.active_ = false; }

LiveTally& LiveTally::operator=(const LiveTally&) { return *this; }

LiveTally& LiveTally::operator=(LiveTally&& o) noexcept {
    if (this != &o) {
        if (active_) tally_remove();
        active_ = o.active_;
        o.active_ = false;
    }
    return *this;
}

LiveTally::~LiveTally() {
    if (active_) tally_remove();
}

long LiveTally::live() { return g_live.load(); }
long LiveTally::peak() { return g_peak.load(); }
void LiveTally::reset_peak() { g_peak.store(g_live.load()); }

}  // namespace detail

namespace {

void validate(const TrackOptions& o) {
    const bool ok = o.newton_tol > 0 && o.max_corrector_iters >= 1 && o.initial_step > 0 &&
                    o.min_step > 0 && o.step_grow > 0 && o.divergence_norm > 0 &&
                    o.singular_cond > 0 && o.real_tol > 0 && o.max_steps >= 1 &&
                    o.min_step < o.initial_step && o.initial_step <= 1.0;
    if (!ok) throw std::invalid_argument("invalid TrackOptions");
}

constexpr double kMaxStep = 0.2;
constexpr double kSingularTWindow = 1e-2;

}  // namespace

PathResult track(const Homotopy& H, const CVec& start, const TrackOptions& opts) {
    validate(opts);
    if (start.size() != H.variable_count())
        throw std::invalid_argument("track: start dimension mismatch");

    PathResult r;
    r.start = start;
    r.solution = start;
    r.t_reached = 1.0;

    const CVec h1 = H.eval(start, 1.0);
    r.residual = norm2(h1);
    if (r.residual > 1e-8 * (1.0 + norm2(start))) {
        r.status = PathStatus::TrackingFailed;
        return r;
    }

    CVec x = start;
    double t = 1.0;
    double step = opts.initial_step;
    unsigned attempts = 0;
    unsigned streak = 0;
    const double start_norm = norm2(start);
    double last_norm = start_norm;
    double cond = std::numeric_limits<double>::infinity();

    auto finish = [&](PathStatus st) {
        r.status = st;
        r.solution = x;
        r.t_reached = t;
        r.residual = norm2(H.eval(x, t));
        r.condition_estimate = cond;
        return r;
    };

    while (t > 0.0) {
        if (attempts++ >= opts.max_steps) return finish(PathStatus::TrackingFailed);

        const double h = std::min(step, t);
        const double t_new = t - h;

        bool ok = true;
        CVec xc = x;

        // Euler predictor: x += h * J^{-1} H_t (t decreasing)
        {
            Lu lu(H.jacobian_x(x, t));
            ok = !lu.singular();
            if (ok) {
                CVec v = H.dt(x, t);
                ok = lu.solve(v);
                if (ok) {
                    for (std::size_t j = 0; j < xc.size(); ++j) xc[j] = x[j] + h * v[j];
                    ok = all_finite(xc);
                }
            }
        }

        // Newton corrector at fixed t_new
        if (ok) {
            bool converged = false;
            for (unsigned it = 0; it < opts.max_corrector_iters; ++it) {
                Lu lu(H.jacobian_x(xc, t_new));
                if (lu.singular()) break;
                CVec delta = H.eval(xc, t_new);
                if (!lu.solve(delta)) break;
                for (std::size_t j = 0; j < xc.size(); ++j) xc[j] -= delta[j];
                if (!all_finite(xc)) break;
                if (norm2(delta) <= opts.newton_tol * (1.0 + norm2(xc))) {
                    converged = true;
                    cond = lu.condition_estimate();
                    break;
                }
            }
            ok = converged;
        }

        if (ok) {
            const double nn = norm2(xc);
            last_norm = nn;
            x = std::move(xc);
            t = t_new;
            ++r.steps_taken;
            if (nn >= opts.divergence_norm) return finish(PathStatus::Diverged);
            if (++streak >= 4) {
                step = std::min(step * opts.step_grow, kMaxStep);
                streak = 0;
            }
        } else {
            streak = 0;
            step *= 0.5;
            if (step < opts.min_step) {
                // Step underflow: diverging, singular near t=0, or plain failure.
                // The stored estimate is from the last converged corrector, so
                // refresh it at the stall point before classifying.
                // TODO: the pivot ratio saturates around 1/sqrt(t) on paths
                // into positive-dimensional sets (cyclic-4); a smallest
                // singular value estimate would let those classify as
                // singular instead of failed.
                cond = Lu(H.jacobian_x(x, t)).condition_estimate();
                if (last_norm >= opts.divergence_norm || last_norm > 1e4 * (1.0 + start_norm))
                    return finish(PathStatus::Diverged);
                if (t <= kSingularTWindow && cond >= opts.singular_cond)
                    return finish(PathStatus::Singular);
                return finish(PathStatus::TrackingFailed);
            }
        }
    }

    r.solution = x;
    r.t_reached = 0.0;
    r.residual = norm2(H.eval(x, 0.0));
    r.condition_estimate = Lu(H.jacobian_x(x, 0.0)).condition_estimate();
    r.status = (r.residual <= 100.0 * opts.newton_tol * (1.0 + norm2(x)))
                   ? PathStatus::Success
                   : PathStatus::TrackingFailed;
    return r;
}

bool is_success(const PathResult& r) { return r.status == PathStatus::Success; }

bool is_real(const PathResult& r, double tol) {
    return max_abs_imag(r.solution) <= tol * (1.0 + norm2(r.solution));
}

bool is_nonsingular(const PathResult& r, double singular_cond) {
    return r.status == PathStatus::Success && r.condition_estimate < singular_cond;
}

std::function<PathResult(const CVec&)> path_map(const Homotopy& H, const TrackOptions& opts) {
    return [H, opts](const CVec& s) { return track(H, s, opts); };
}

}  // namespace hc
