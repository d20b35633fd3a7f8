#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hc/polyhedral.hpp"

using namespace hc;

namespace {

std::vector<std::array<Complex, 2>> cell_edge_coeffs(const MixedCell& cell,
                                                     const std::vector<CVec>& support_coeffs) {
    std::vector<std::array<Complex, 2>> out(cell.edge_indices.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = {support_coeffs[j][cell.edge_indices[j].first],
                  support_coeffs[j][cell.edge_indices[j].second]};
    }
    return out;
}

std::vector<CVec> random_support_coeffs(unsigned n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<CVec> coeffs(n, CVec(std::size_t{1} << n));
    for (CVec& c : coeffs) {
        for (Complex& z : c) {
            do {
                z = Complex(gauss(rng), gauss(rng));
            } while (std::abs(z) < 1e-3);
        }
    }
    return coeffs;
}

Complex eval_binomial(const MixedCell& cell, const std::vector<std::array<Complex, 2>>& coeffs,
                      std::size_t j, const CVec& z) {
    auto mono = [&](const LatticePoint& e) {
        Complex r = 1.0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::int64_t k = 0; k < e[i]; ++k) r *= z[i];
        }
        return r;
    };
    return coeffs[j][0] * mono(cell.edges[j].first) + coeffs[j][1] * mono(cell.edges[j].second);
}

}  // namespace

TEST_CASE("stretched cube support") {
    const Support s1 = stretched_cube_support(1);
    REQUIRE(s1.size() == 1);
    REQUIRE(s1[0].size() == 2);
    CHECK(s1[0][0] == LatticePoint{0});
    CHECK(s1[0][1] == LatticePoint{2});

    const Support s2 = stretched_cube_support(2);
    REQUIRE(s2.size() == 2);
    for (const auto& eq : s2) CHECK(eq.size() == 4);
    // equation 1: subsets with the first coordinate doubled
    CHECK(s2[0][0] == LatticePoint{0, 0});
    CHECK(s2[0][1] == LatticePoint{2, 0});
    CHECK(s2[0][2] == LatticePoint{0, 1});
    CHECK(s2[0][3] == LatticePoint{2, 1});
    // equation 2: second coordinate doubled
    CHECK(s2[1][1] == LatticePoint{1, 0});
    CHECK(s2[1][2] == LatticePoint{0, 2});
    CHECK(s2[1][3] == LatticePoint{1, 2});

    for (unsigned n = 1; n <= 5; ++n) {
        for (const auto& eq : stretched_cube_support(n)) CHECK(eq.size() == (1u << n));
    }
}

TEST_CASE("stretched lifting weights") {
    const auto w3 = stretched_lifting(3);
    const Support s3 = stretched_cube_support(3);
    // weight of v in A_i is (i+1 in 0-based terms) * sum(v)
    for (unsigned i = 0; i < 3; ++i) {
        for (std::size_t k = 0; k < s3[i].size(); ++k) {
            std::int64_t sum = 0;
            for (auto v : s3[i][k]) sum += v;
            CHECK(w3[i][k] == static_cast<std::int64_t>(i + 1) * sum);
            if (sum == 0) CHECK(w3[i][k] == 0);
        }
    }
    // n=2, equation 2, point (1,2) has weight 2*3 = 6
    const auto w2 = stretched_lifting(2);
    const Support s2 = stretched_cube_support(2);
    const auto it = std::find(s2[1].begin(), s2[1].end(), LatticePoint{1, 2});
    REQUIRE(it != s2[1].end());
    CHECK(w2[1][static_cast<std::size_t>(it - s2[1].begin())] == 6);
    // n=3, equation 3, point (1,1,2) has weight 3*4 = 12
    const auto it3 = std::find(s3[2].begin(), s3[2].end(), LatticePoint{1, 1, 2});
    REQUIRE(it3 != s3[2].end());
    CHECK(w3[2][static_cast<std::size_t>(it3 - s3[2].begin())] == 12);
}

TEST_CASE("permutations map to mixed cells") {
    const MixedCell id2 = perm_to_mixed_cell(Permutation{{0, 1}}, 2);
    CHECK(id2.volume == 4);  // 2^Fix(id) = 2^2
    CHECK(id2.is_fine);
    CHECK(id2.normal == std::vector<std::int64_t>{-1, -2, 1});

    const MixedCell swap2 = perm_to_mixed_cell(Permutation{{1, 0}}, 2);
    CHECK(swap2.volume == 1);
    CHECK(swap2.normal == std::vector<std::int64_t>{-2, -1, 1});

    CHECK(id2.volume + swap2.volume == 5);

    CHECK_THROWS_AS(perm_to_mixed_cell(Permutation{{0, 0}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(perm_to_mixed_cell(Permutation{{0}}, 2), std::invalid_argument);
}

TEST_CASE("edge endpoints belong to the support and attain beta") {
    for (unsigned n = 1; n <= 5; ++n) {
        const Support supp = stretched_cube_support(n);
        for (auto cur = mixed_cell_iter(n).cursor();;) {
            auto cell = cur();
            if (!cell) break;
            for (unsigned j = 0; j < n; ++j) {
                const auto [ui, vi] = cell->edge_indices[j];
                REQUIRE(supp[j][ui] == cell->edges[j].first);
                REQUIRE(supp[j][vi] == cell->edges[j].second);

                auto lifted_dot = [&](const LatticePoint& p) {
                    std::int64_t s = 0;
                    for (unsigned i = 0; i < n; ++i) s += cell->normal[i] * p[i];
                    std::int64_t sum = 0;
                    for (auto v : p) sum += v;
                    return s + static_cast<std::int64_t>(j + 1) * sum;
                };
                // the linear form is constant on the chosen edge...
                CHECK(lifted_dot(cell->edges[j].first) == cell->beta[j]);
                CHECK(lifted_dot(cell->edges[j].second) == cell->beta[j]);
                // ...and strictly larger on every other support point
                for (std::size_t k = 0; k < supp[j].size(); ++k) {
                    if (k == ui || k == vi) continue;
                    CHECK(lifted_dot(supp[j][k]) > cell->beta[j]);
                }
            }
        }
    }
}

TEST_CASE("cell iterator yields n! cells with the right volumes") {
    CHECK(count(mixed_cell_iter(3)) == 6);
    CHECK(count(mixed_cell_iter(4)) == 24);

    std::multiset<std::uint64_t> volumes;
    std::uint64_t total = 0;
    for (auto cur = mixed_cell_iter(3).cursor();;) {
        auto cell = cur();
        if (!cell) break;
        volumes.insert(cell->volume);
        total += cell->volume;
    }
    CHECK(volumes == std::multiset<std::uint64_t>{8, 2, 2, 2, 1, 1});
    CHECK(total == 16);

    const auto one = collect(mixed_cell_iter(1));
    REQUIRE(one.size() == 1);
    CHECK(one[0].volume == 2);
}

TEST_CASE("bkk table and oracle") {
    CHECK(bkk_stretched(2) == 5);
    CHECK(bkk_stretched(3) == 16);
    CHECK(bkk_stretched(4) == 65);
    CHECK(bkk_stretched(5) == 326);
    CHECK(bkk_stretched(6) == 1957);

    CHECK(bkk_oracle(2) == 5);   // 9 - 4 = 5 by hand
    CHECK(bkk_oracle(3) == 16);  // 64 - 54 + 6

    for (unsigned n = 1; n <= 8; ++n) CHECK(bkk_stretched(n) == bkk_oracle(n));

    // third route: the sequence satisfies a(n) = n a(n-1) + 1 with a(1) = 2
    std::uint64_t a = 2;
    for (unsigned n = 2; n <= 8; ++n) {
        a = n * a + 1;
        CHECK(bkk_stretched(n) == a);
    }
}

TEST_CASE("binomial cell solutions, n = 1") {
    // direction 2, equation -1 + x^2 = 0
    const MixedCell cell = perm_to_mixed_cell(Permutation{{0}}, 1);
    REQUIRE(cell.edges[0].first == LatticePoint{0});
    REQUIRE(cell.edges[0].second == LatticePoint{2});
    const auto sols = collect(solve_binomial_cell(cell, {{Complex(-1.0), Complex(1.0)}}));
    REQUIRE(sols.size() == 2);
    std::vector<double> roots{sols[0][0].real(), sols[1][0].real()};
    std::sort(roots.begin(), roots.end());
    CHECK(roots[0] == doctest::Approx(-1.0));
    CHECK(roots[1] == doctest::Approx(1.0));
    CHECK(std::abs(sols[0][0].imag()) < 1e-12);

    CHECK_THROWS_AS(collect(solve_binomial_cell(cell, {{Complex(0.0), Complex(1.0)}})),
                    std::invalid_argument);
}

TEST_CASE("identity directions with equations x_j - 1 give the all-ones point") {
    const unsigned n = 3;
    MixedCell cell;
    for (unsigned j = 0; j < n; ++j) {
        LatticePoint u(n, 0), v(n, 0);
        v[j] = 1;
        cell.edge_indices.emplace_back(0, 0);
        cell.edges.emplace_back(std::move(u), std::move(v));
    }
    cell.volume = 1;
    const auto sols = collect(
        solve_binomial_cell(cell, {{Complex(-1.0), Complex(1.0)},
                                   {Complex(-1.0), Complex(1.0)},
                                   {Complex(-1.0), Complex(1.0)}}));
    REQUIRE(sols.size() == 1);
    for (const Complex& z : sols[0]) CHECK(std::abs(z - Complex(1.0)) < 1e-12);
}

TEST_CASE("binomial cell solutions land in the torus with tiny residuals") {
    for (unsigned n = 2; n <= 3; ++n) {
        const auto coeffs = random_support_coeffs(n, 1000 + n);
        std::size_t total = 0;
        for (auto cur = mixed_cell_iter(n).cursor();;) {
            auto cell = cur();
            if (!cell) break;
            const auto ec = cell_edge_coeffs(*cell, coeffs);
            const auto sols = collect(solve_binomial_cell(*cell, ec));
            CHECK(sols.size() == cell->volume);
            total += sols.size();
            for (const CVec& z : sols) {
                for (const Complex& zi : z) CHECK(std::abs(zi) > 1e-8);
                for (std::size_t j = 0; j < n; ++j) {
                    CHECK(std::abs(eval_binomial(*cell, ec, j, z)) < 1e-10 * (1.0 + norm2(z)));
                }
            }
        }
        CHECK(total == bkk_stretched(n));
    }
}

TEST_CASE("polyhedral start iterator flattens cells lazily") {
    const unsigned n = 2;
    const auto coeffs = random_support_coeffs(n, 77);

    reset_binomial_solve_count();
    const auto it = polyhedral_start_iter(n, coeffs);
    CHECK(binomial_solve_count() == 0);  // construction does no solving

    const auto pairs = collect(it);
    CHECK(pairs.size() == 5);
    CHECK(binomial_solve_count() == 2);  // one solve per cell

    const auto pairs3 = collect(polyhedral_start_iter(3, random_support_coeffs(3, 78)));
    CHECK(pairs3.size() == 16);

    CHECK_THROWS_AS(polyhedral_start_iter(2, {}), std::invalid_argument);
}
