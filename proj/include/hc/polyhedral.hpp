#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hc/linalg.hpp"
#include "hc/seq.hpp"

namespace hc {

using LatticePoint = std::vector<std::int64_t>;

// Per-equation monomial supports A_i; points within one A_i are distinct.
using Support = std::vector<std::vector<LatticePoint>>;

// A_i = indicator vectors of the subsets of [n] with coordinate i doubled,
// in subset-bitmask order; |A_i| = 2^n.
Support stretched_cube_support(unsigned n);

// Lifting weight of point v in A_i is i * sum(v), aligned with the support order.
std::vector<std::vector<std::int64_t>> stretched_lifting(unsigned n);

struct Permutation {
    std::vector<unsigned> images;  // 0-based bijection of {0,...,n-1}

    unsigned fixed_points() const;
    bool is_valid() const;
};

// A fine mixed cell of the stretched-cube subdivision: one edge (u_j, v_j)
// per equation, the inner normal (-sigma, 1), the attained minima beta, and
// the volume 2^{Fix(sigma)}.
struct MixedCell {
    std::vector<std::pair<std::size_t, std::size_t>> edge_indices;
    std::vector<std::pair<LatticePoint, LatticePoint>> edges;
    std::vector<std::int64_t> normal;
    std::vector<std::int64_t> beta;
    bool is_fine = true;
    std::uint64_t volume = 1;
};

MixedCell perm_to_mixed_cell(const Permutation& sigma, unsigned n);

// One cell per permutation of [n], in lexicographic permutation order, lazily.
Seq<MixedCell> mixed_cell_iter(unsigned n);

// Mixed volume of the stretched cubes: sum of 2^{Fix(sigma)} over S_n,
// streamed over the cell iterator.
std::uint64_t bkk_stretched(unsigned n);

// Independent inclusion-exclusion evaluation: Minkowski sums of stretched
// cubes are boxes with side |S| + [j in S], so the mixed volume is
// sum_{k=1..n} (-1)^{n-k} C(n,k) (k+1)^k k^{n-k}.
std::uint64_t bkk_oracle(unsigned n);

// Torus solutions of c_u x^u + c_v x^v = 0, j = 1..n, for the cell's edges;
// exactly volume(cell) of them, via integer row reduction of the direction
// matrix. Lazy: no work happens until the first element is pulled.
Seq<CVec> solve_binomial_cell(const MixedCell& cell,
                              const std::vector<std::array<Complex, 2>>& edge_coeffs);

// Lazy flattening of per-cell binomial solutions over all mixed cells;
// support_coeffs holds one coefficient per support point per equation.
Seq<std::pair<CVec, MixedCell>> polyhedral_start_iter(unsigned n,
                                                      const std::vector<CVec>& support_coeffs);

// Counts binomial-cell solves, so tests can observe laziness.
std::uint64_t binomial_solve_count();
void reset_binomial_solve_count();

}  // namespace hc
