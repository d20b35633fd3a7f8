#include <algorithm>
#include <random>

#include "doctest.h"
#include "hc/startsys.hpp"
#include "hc/tracker.hpp"
#include "oracles.hpp"

using namespace hc;

namespace {

PolySystem univariate(double c2, double c0) {
    return parse_system(std::string(R"({"variables": ["x"], "polynomials": [[)") +
                        R"({"c": [)" + std::to_string(c2) + R"(, 0], "e": [2]},)" +
                        R"({"c": [)" + std::to_string(c0) + R"(, 0], "e": [0]}]]})");
}

}  // namespace

TEST_CASE("tracking x^2-1 to x^2-4 finds both roots, over 10 gammas") {
    const PolySystem F = univariate(1.0, -4.0);
    const PolySystem G = univariate(1.0, -1.0);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Homotopy H = Homotopy::straight_line(F, G, random_unit_gamma(seed));
        const PathResult r1 = track(H, {Complex(1.0)});
        const PathResult r2 = track(H, {Complex(-1.0)});
        REQUIRE(is_success(r1));
        REQUIRE(is_success(r2));
        CHECK(r1.residual < 1e-8);
        CHECK(r2.residual < 1e-8);
        std::vector<double> endpoints{r1.solution[0].real(), r2.solution[0].real()};
        std::sort(endpoints.begin(), endpoints.end());
        CHECK(endpoints[0] == doctest::Approx(-2.0).epsilon(1e-8));
        CHECK(endpoints[1] == doctest::Approx(2.0).epsilon(1e-8));
        CHECK(std::abs(r1.solution[0] - r2.solution[0]) > 1e-4);
    }
}

TEST_CASE("constant homotopy returns its start") {
    const PolySystem F = univariate(1.0, -4.0);
    const Homotopy H = Homotopy::straight_line(F, F, 1.0);
    const PathResult r = track(H, {Complex(2.0)});
    REQUIRE(is_success(r));
    CHECK(std::abs(r.solution[0] - Complex(2.0)) < 1e-8);
    CHECK(r.t_reached == 0.0);
}

TEST_CASE("condition estimate is small at a simple zero") {
    const PolySystem F = univariate(1.0, -4.0);
    const Homotopy H = Homotopy::straight_line(F, univariate(1.0, -1.0), random_unit_gamma(3));
    const PathResult r = track(H, {Complex(1.0)});
    REQUIRE(is_success(r));
    CHECK(r.condition_estimate < 1e3);
    CHECK(is_nonsingular(r));
}

TEST_CASE("a root escaping to infinity is classified Diverged") {
    // p x^2 - 1 from p=1 to p=0: the root 1/sqrt(p) escapes
    using E = std::vector<std::uint32_t>;
    const Polynomial f = Polynomial::from_terms(
        1, 1,
        {Term{1.0, Monomial(E{2}), Monomial(E{1})}, Term{-1.0, Monomial(E{0}), Monomial(E{0})}});
    const PolySystem F({f}, {"x"}, {"p"});
    const Homotopy H = Homotopy::parameter(F, {Complex(1.0)}, {Complex(0.0)});
    const PathResult r = track(H, {Complex(1.0)});
    CHECK(r.status == PathStatus::Diverged);
    CHECK(norm2(r.solution) > 1e3);
}

TEST_CASE("violated start precondition fails at t = 1") {
    const PolySystem F = univariate(1.0, -4.0);
    const Homotopy H = Homotopy::straight_line(F, univariate(1.0, -1.0), 1.0);
    const PathResult r = track(H, {Complex(5.0)});  // not a zero of x^2 - 1
    CHECK(r.status == PathStatus::TrackingFailed);
    CHECK(r.t_reached == 1.0);
}

TEST_CASE("track is deterministic bit for bit") {
    const PolySystem F = oracles::intro_system();
    const Homotopy H = Homotopy::straight_line(F, total_degree_system({2, 2}, 1.0, F.variables()),
                                               random_unit_gamma(11));
    const PathResult a = track(H, {Complex(1.0), Complex(1.0)});
    const PathResult b = track(H, {Complex(1.0), Complex(1.0)});
    REQUIRE(a.solution.size() == b.solution.size());
    for (std::size_t i = 0; i < a.solution.size(); ++i) CHECK(a.solution[i] == b.solution[i]);
    CHECK(a.residual == b.residual);
    CHECK(a.steps_taken == b.steps_taken);
    CHECK(a.condition_estimate == b.condition_estimate);
}

TEST_CASE("intro system has four separated endpoints matching the quadratic oracle") {
    const PolySystem F = oracles::intro_system();
    const Homotopy H = Homotopy::straight_line(F, total_degree_system({2, 2}, 1.0, F.variables()),
                                               random_unit_gamma(17));
    std::vector<CVec> endpoints;
    for (auto cur = total_degree_start_iter({2, 2}).cursor();;) {
        auto s = cur();
        if (!s) break;
        const PathResult r = track(H, *s);
        REQUIRE(is_success(r));
        CHECK(r.residual <= 100.0 * 1e-10 * (1.0 + norm2(r.solution)));
        endpoints.push_back(r.solution);
    }
    REQUIRE(endpoints.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            double dist = 0.0;
            for (std::size_t k = 0; k < 2; ++k)
                dist = std::max(dist, std::abs(endpoints[i][k] - endpoints[j][k]));
            CHECK(dist > 1e-4);
        }
    }
    CHECK(oracles::multiset_match(endpoints, oracles::intro_zeros(), 1e-6));
}

TEST_CASE("is_real and is_nonsingular predicates") {
    const PolySystem F = oracles::intro_system();
    const Homotopy H = Homotopy::straight_line(F, total_degree_system({2, 2}, 1.0, F.variables()),
                                               random_unit_gamma(23));
    std::size_t real_count = 0;
    for (auto cur = total_degree_start_iter({2, 2}).cursor();;) {
        auto s = cur();
        if (!s) break;
        const PathResult r = track(H, *s);
        if (is_real(r)) ++real_count;
    }
    CHECK(real_count == 2);  // quadratic oracle: exactly two real zeros

    PathResult fake;
    fake.solution = {Complex(0.0, 1.0)};
    fake.status = PathStatus::Success;
    fake.condition_estimate = 1.0;
    CHECK_FALSE(is_real(fake));
    fake.status = PathStatus::Diverged;
    CHECK_FALSE(is_nonsingular(fake));
}

TEST_CASE("path_map composes along concatenated homotopies") {
    const PolySystem F = oracles::parabola_family();
    const Homotopy H1 = Homotopy::parameter(F, {Complex(0.0)}, {Complex(-1.0)});
    const Homotopy H2 = Homotopy::parameter(F, {Complex(-1.0)}, {Complex(-2.0)});
    const Homotopy C = Homotopy::concatenate(H1, H2);

    const CVec start{Complex(1.0), Complex(1.0)};  // zero of the family at p = 0
    const auto f1 = path_map(H1);
    const auto f2 = path_map(H2);
    const auto fc = path_map(C);

    const PathResult staged = f2(f1(start).solution);
    const PathResult direct = fc(start);
    REQUIRE(is_success(staged));
    REQUIRE(is_success(direct));
    CHECK(oracles::rel_vector_error(staged.solution, direct.solution) < 1e-6);

    // identity homotopy gives the identity path map
    const PolySystem F0 = specialize(F, {Complex(0.0)});
    const Homotopy ID = Homotopy::straight_line(F0, F0, 1.0);
    const PathResult id = path_map(ID)(start);
    REQUIRE(is_success(id));
    CHECK(oracles::rel_vector_error(id.solution, start) < 1e-8);
}

TEST_CASE("invalid options are rejected") {
    const PolySystem F = univariate(1.0, -1.0);
    const Homotopy H = Homotopy::straight_line(F, F, 1.0);
    TrackOptions bad;
    bad.initial_step = 2.0;
    CHECK_THROWS_AS(track(H, {Complex(1.0)}, bad), std::invalid_argument);
    bad = TrackOptions{};
    bad.min_step = 1.0;
    CHECK_THROWS_AS(track(H, {Complex(1.0)}, bad), std::invalid_argument);
}
