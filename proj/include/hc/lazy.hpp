#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "hc/bitmask.hpp"
#include "hc/seq.hpp"
#include "hc/startsys.hpp"
#include "hc/tracker.hpp"

namespace hc {

// Counters for tests and the CLI --stats flag. A consumption session starts
// with reset(). Derived iterators (bitmask_filter, compose) share the
// source's instrumentation, so multi-stage pipelines account for every path.
class Instrumentation {
  public:
    void reset() {
        paths_tracked_.store(0);
        detail::LiveTally::reset_peak();
    }
    std::uint64_t paths_tracked() const { return paths_tracked_.load(); }
    long peak_live_results() const { return detail::LiveTally::peak(); }
    void note_tracked() { paths_tracked_.fetch_add(1); }

  private:
    std::atomic<std::uint64_t> paths_tracked_{0};
};

// The homotopy iterator: a homotopy, a start-solution iterator, and an
// optional bitmask. Consuming it tracks one path per pulled element (zero-bit
// starts are skipped without tracking). Multi-shot: every consumption
// re-tracks, which is sound because track() is deterministic.
class ResultIterator {
  public:
    ResultIterator(Homotopy homotopy, TrackOptions options, Seq<CVec> starts,
                   std::optional<Bitmask> bitmask = std::nullopt,
                   std::shared_ptr<Instrumentation> stats = nullptr);

    Seq<PathResult> results() const;
    Seq<CVec> solutions() const;

    const Homotopy& homotopy() const { return homotopy_; }
    const TrackOptions& options() const { return options_; }
    Seq<CVec> starts() const { return starts_; }
    const std::optional<Bitmask>& bitmask() const { return bitmask_; }
    const std::shared_ptr<Instrumentation>& stats() const { return stats_; }

  private:
    Homotopy homotopy_;
    TrackOptions options_;
    Seq<CVec> starts_;
    std::optional<Bitmask> bitmask_;
    std::shared_ptr<Instrumentation> stats_;
};

// Straight-line homotopy from the total-degree start system of F's degrees,
// with roots-of-unity start tuples. Returns instantly; tracks nothing.
ResultIterator solve_total_degree(const PolySystem& F, Complex gamma, TrackOptions opts = {});

// Parameter homotopy of F from q_start to p_target over the given starts.
ResultIterator solve_parameter(const PolySystem& F, CVec q_start, CVec p_target, Seq<CVec> starts,
                               TrackOptions opts = {});

// Explicit homotopy over explicit starts.
ResultIterator solve_given(Homotopy homotopy, Seq<CVec> starts, TrackOptions opts = {});

// Eagerly tracks every path once, recording pred as a bitmask; the returned
// iterator re-tracks only the one-bit paths on consumption.
ResultIterator bitmask_filter(const std::function<bool(const PathResult&)>& pred,
                              const ResultIterator& it);

// Chains a further homotopy onto the (lazily tracked) solutions of a prior
// iterator. Requires prior's target system to equal next's start system
// coefficientwise within 1e-12. Tracks nothing at construction.
ResultIterator compose(const ResultIterator& prior, Homotopy next, TrackOptions opts = {});

// compose with a parameter homotopy of F from q_start to p_target.
ResultIterator compose_parameter(const PolySystem& F, const ResultIterator& prior, CVec q_start,
                                 CVec p_target, TrackOptions opts = {});

// Coordinate-wise sum (the trace accumulator). Empty input gives an empty vector.
CVec sum_vectors(const Seq<CVec>& s);

}  // namespace hc
