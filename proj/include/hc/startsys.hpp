#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hc/polysys.hpp"
#include "hc/seq.hpp"

namespace hc {

// Raised when a vector cannot be matched to a tuple of roots of unity.
class IndexResolutionError : public std::runtime_error {
  public:
    explicit IndexResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

// The n n-th roots of unity, starting at 1.
Seq<Complex> roots_of_unity_iter(unsigned n);

// gamma * (x_i^{d_i} - 1), i = 1..n.
PolySystem total_degree_system(const std::vector<unsigned>& degrees, Complex gamma,
                               std::vector<std::string> variables = {});

// All prod(d_i) tuples of roots of unity, coordinate 1 varying fastest; the
// k-th tuple has bezout_index k+1.
Seq<CVec> total_degree_start_iter(std::vector<unsigned> degrees);

// ind_i = round(arg(z_i) d_i / 2pi) mod d_i.
std::vector<unsigned> indices_of_entries(const CVec& z, const std::vector<unsigned>& degrees);

// 1-based position of a tuple of roots of unity in the product ordering.
std::size_t bezout_index(const CVec& z, const std::vector<unsigned>& degrees);

// An aperiodic binary necklace, stored as the bead positions of its
// lexicographically minimal rotation (black bead = 1).
struct Necklace {
    std::vector<unsigned> white;
    std::vector<unsigned> black;

    unsigned d() const { return static_cast<unsigned>(white.size() + black.size()); }
};

// Each aperiodic rotation class with d1 white and d2 black beads, exactly
// once, by increasing binary string.
Seq<Necklace> necklaces_iter(unsigned d1, unsigned d2);

// Moreau count of aperiodic classes: (1/d) sum_{e | gcd(d1,d2)} mu(e) C(d/e, d1/e).
std::uint64_t necklace_count(unsigned d1, unsigned d2);

// The germ-interpolation system: variables a_1..a_{d1}, b_1..b_{d2},
// parameters c_1..c_{d1+d2}, equations h_1..h_{d1+d2-1} (coefficients of
// t^1..t^{d-1} in y(t) - sum c_i x(t)^i) plus the normalization a_1 - 1.
PolySystem polynomial_interpolants(unsigned d1, unsigned d2);

// The start solution (a, b) indexed by a necklace, normalized so a_1 = 1.
CVec solution_from_necklace(const Necklace& N);

}  // namespace hc
