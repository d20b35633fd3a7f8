#include "hc/lazy.hpp"

#include <stdexcept>
#include <utility>

namespace hc {

namespace {
constexpr double kComposeTol = 1e-12;
}

ResultIterator::ResultIterator(Homotopy homotopy, TrackOptions options, Seq<CVec> starts,
                               std::optional<Bitmask> bitmask,
                               std::shared_ptr<Instrumentation> stats)
    : homotopy_(std::move(homotopy)), options_(options), starts_(std::move(starts)),
      bitmask_(std::move(bitmask)),
      stats_(stats ? std::move(stats) : std::make_shared<Instrumentation>()) {}

Seq<PathResult> ResultIterator::results() const {
    const Homotopy h = homotopy_;
    const TrackOptions opts = options_;
    const Seq<CVec> starts = starts_;
    const std::optional<Bitmask> mask = bitmask_;
    const std::shared_ptr<Instrumentation> stats = stats_;
    return Seq<PathResult>([h, opts, starts, mask, stats] {
        auto cur = starts.cursor();
        std::size_t index = 0;
        return [h, opts, cur, mask, stats, index]() mutable -> std::optional<PathResult> {
            for (;;) {
                auto s = cur();
                if (!s) return std::nullopt;
                const std::size_t k = index++;
                if (mask && (k >= mask->size() || !mask->test(k))) continue;
                stats->note_tracked();
                return track(h, *s, opts);
            }
        };
    });
}

Seq<CVec> ResultIterator::solutions() const {
    return map_lazy([](const PathResult& r) { return r.solution; }, results());
}

ResultIterator solve_total_degree(const PolySystem& F, Complex gamma, TrackOptions opts) {
    if (F.is_parameterized())
        throw std::invalid_argument("solve_total_degree: system must be parameter-free");
    const std::vector<unsigned> d = degrees(F);
    Homotopy H = Homotopy::straight_line(F, total_degree_system(d, gamma, F.variables()), gamma);
    return ResultIterator(std::move(H), opts, total_degree_start_iter(d));
}

ResultIterator solve_parameter(const PolySystem& F, CVec q_start, CVec p_target, Seq<CVec> starts,
                               TrackOptions opts) {
    Homotopy H = Homotopy::parameter(F, std::move(q_start), std::move(p_target));
    return ResultIterator(std::move(H), opts, std::move(starts));
}

ResultIterator solve_given(Homotopy homotopy, Seq<CVec> starts, TrackOptions opts) {
    return ResultIterator(std::move(homotopy), opts, std::move(starts));
}

ResultIterator bitmask_filter(const std::function<bool(const PathResult&)>& pred,
                              const ResultIterator& it) {
    if (it.bitmask())
        throw std::invalid_argument("bitmask_filter: iterator already carries a bitmask");

    std::vector<bool> bits;
    for (auto cur = it.results().cursor();;) {
        auto r = cur();
        if (!r) break;
        bits.push_back(pred(*r));
    }
    Bitmask mask(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k]) mask.set(k);
    }
    return ResultIterator(it.homotopy(), it.options(), it.starts(), std::move(mask), it.stats());
}

ResultIterator compose(const ResultIterator& prior, Homotopy next, TrackOptions opts) {
    if (max_coefficient_distance(prior.homotopy().target_system(), next.start_system()) >
        kComposeTol)
        throw std::invalid_argument(
            "compose: prior target system does not match the next start system");
    return ResultIterator(std::move(next), opts, prior.solutions(), std::nullopt, prior.stats());
}

ResultIterator compose_parameter(const PolySystem& F, const ResultIterator& prior, CVec q_start,
                                 CVec p_target, TrackOptions opts) {
    return compose(prior, Homotopy::parameter(F, std::move(q_start), std::move(p_target)), opts);
}

CVec sum_vectors(const Seq<CVec>& s) {
    return accumulate(
        [](CVec acc, const CVec& v) {
            if (acc.empty()) return v;
            if (acc.size() != v.size()) throw std::invalid_argument("sum_vectors: ragged input");
            for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
            return acc;
        },
        s, CVec{});
}

}  // namespace hc
