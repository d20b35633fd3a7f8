#include "hc/polyhedral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hc {

namespace {

std::atomic<std::uint64_t> g_binomial_solves{0};

LatticePoint subset_point(unsigned n, unsigned mask, unsigned doubled) {
    LatticePoint p(n, 0);
    for (unsigned j = 0; j < n; ++j) {
        if (mask & (1u << j)) p[j] = 1;
    }
    p[doubled] *= 2;
    return p;
}

std::int64_t point_sum(const LatticePoint& p) {
    std::int64_t s = 0;
    for (std::int64_t v : p) s += v;
    return s;
}

}  // namespace

Support stretched_cube_support(unsigned n) {
    if (n == 0) throw std::invalid_argument("stretched_cube_support: n must be at least 1");
    if (n >= 31) throw std::invalid_argument("stretched_cube_support: n too large");
    Support supp(n);
    for (unsigned i = 0; i < n; ++i) {
        supp[i].reserve(1u << n);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            supp[i].push_back(subset_point(n, mask, i));
        }
    }
    return supp;
}

std::vector<std::vector<std::int64_t>> stretched_lifting(unsigned n) {
    const Support supp = stretched_cube_support(n);
    std::vector<std::vector<std::int64_t>> w(n);
    for (unsigned i = 0; i < n; ++i) {
        w[i].reserve(supp[i].size());
        for (const LatticePoint& p : supp[i]) {
            w[i].push_back(static_cast<std::int64_t>(i + 1) * point_sum(p));
        }
    }
    return w;
}

unsigned Permutation::fixed_points() const {
    unsigned f = 0;
    for (unsigned i = 0; i < images.size(); ++i) {
        if (images[i] == i) ++f;
    }
    return f;
}

bool Permutation::is_valid() const {
    std::vector<char> seen(images.size(), 0);
    for (unsigned v : images) {
        if (v >= images.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

MixedCell perm_to_mixed_cell(const Permutation& sigma, unsigned n) {
    if (sigma.images.size() != n || !sigma.is_valid())
        throw std::invalid_argument("perm_to_mixed_cell: not a permutation of the right size");

    MixedCell cell;
    cell.edge_indices.reserve(n);
    cell.edges.reserve(n);
    cell.normal.resize(n + 1);
    for (unsigned i = 0; i < n; ++i) cell.normal[i] = -static_cast<std::int64_t>(sigma.images[i] + 1);
    cell.normal[n] = 1;

    cell.beta.reserve(n);
    for (unsigned j = 0; j < n; ++j) {
        unsigned mask_u = 0;
        unsigned mask_v = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (sigma.images[i] > j) mask_u |= 1u << i;
            if (sigma.images[i] >= j) mask_v |= 1u << i;
        }
        cell.edge_indices.emplace_back(mask_u, mask_v);
        LatticePoint u = subset_point(n, mask_u, j);
        LatticePoint v = subset_point(n, mask_v, j);

        // inner product of the lifted point with (-sigma, 1)
        auto lifted_dot = [&](const LatticePoint& p) {
            std::int64_t s = 0;
            for (unsigned i = 0; i < n; ++i) s += cell.normal[i] * p[i];
            s += static_cast<std::int64_t>(j + 1) * point_sum(p);
            return s;
        };
        cell.beta.push_back(std::min(lifted_dot(u), lifted_dot(v)));
        cell.edges.emplace_back(std::move(u), std::move(v));
    }

    cell.is_fine = true;
    cell.volume = std::uint64_t{1} << sigma.fixed_points();
    return cell;
}

Seq<MixedCell> mixed_cell_iter(unsigned n) {
    if (n == 0) throw std::invalid_argument("mixed_cell_iter: n must be at least 1");
    return Seq<MixedCell>([n] {
        std::vector<unsigned> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        bool exhausted = false;
        return [n, perm, exhausted]() mutable -> std::optional<MixedCell> {
            if (exhausted) return std::nullopt;
            MixedCell cell = perm_to_mixed_cell(Permutation{perm}, n);
            exhausted = !std::next_permutation(perm.begin(), perm.end());
            return cell;
        };
    });
}

std::uint64_t bkk_stretched(unsigned n) {
    return accumulate([](std::uint64_t s, const MixedCell& c) { return s + c.volume; },
                      mixed_cell_iter(n), std::uint64_t{0});
}

std::uint64_t bkk_oracle(unsigned n) {
    if (n == 0) throw std::invalid_argument("bkk_oracle: n must be at least 1");
    auto ipow = [](std::int64_t b, unsigned e) {
        std::int64_t r = 1;
        for (unsigned i = 0; i < e; ++i) r *= b;
        return r;
    };
    std::int64_t sum = 0;
    std::int64_t binom = 1;  // C(n, k), updated incrementally
    for (unsigned k = 1; k <= n; ++k) {
        binom = binom * static_cast<std::int64_t>(n - k + 1) / static_cast<std::int64_t>(k);
        const std::int64_t box = ipow(k + 1, k) * ipow(k, n - k);
        const std::int64_t sign = ((n - k) % 2 == 0) ? 1 : -1;
        sum += sign * binom * box;
    }
    return static_cast<std::uint64_t>(sum);
}

namespace {

Complex int_pow_signed(Complex z, std::int64_t e) {
    const bool neg = e < 0;
    std::uint64_t k = static_cast<std::uint64_t>(neg ? -e : e);
    Complex r = 1.0;
    while (k > 0) {
        if (k & 1u) r *= z;
        z *= z;
        k >>= 1u;
    }
    return neg ? 1.0 / r : r;
}

// Solves x^M = b in the torus, |det M| solutions. Row-reduces [M | exponents
// of b] over the integers to an upper triangular system, then peels roots of
// unity off from the last coordinate backwards.
std::vector<CVec> torus_solve(std::vector<std::vector<std::int64_t>> M, CVec b) {
    const std::size_t n = M.size();
    std::vector<std::vector<std::int64_t>> R(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) R[i][i] = 1;

    for (std::size_t col = 0; col < n; ++col) {
        for (;;) {
            std::size_t pivot = n;
            for (std::size_t i = col; i < n; ++i) {
                if (M[i][col] != 0 && (pivot == n || std::llabs(M[i][col]) < std::llabs(M[pivot][col])))
                    pivot = i;
            }
            if (pivot == n)
                throw std::logic_error("binomial system: singular direction matrix in a fine cell");
            std::swap(M[pivot], M[col]);
            std::swap(R[pivot], R[col]);

            bool reduced = true;
            for (std::size_t i = col + 1; i < n; ++i) {
                if (M[i][col] == 0) continue;
                const std::int64_t q = M[i][col] / M[col][col];
                for (std::size_t j = 0; j < n; ++j) {
                    M[i][j] -= q * M[col][j];
                    R[i][j] -= q * R[col][j];
                }
                if (M[i][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (M[col][col] < 0) {
            for (std::size_t j = 0; j < n; ++j) {
                M[col][j] = -M[col][j];
                R[col][j] = -R[col][j];
            }
        }
    }

    // transformed right-hand sides b'_i = prod_j b_j^{R[i][j]}
    CVec bt(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex w = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (R[i][j] != 0) w *= int_pow_signed(b[j], R[i][j]);
        }
        bt[i] = w;
    }

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(M[i][i]);

    std::vector<CVec> out;
    out.reserve(total);
    CVec x(n);
    auto descend = [&](auto&& self, std::size_t level) -> void {
        const std::size_t i = level - 1;
        Complex rhs = bt[i];
        for (std::size_t j = i + 1; j < n; ++j) rhs *= int_pow_signed(x[j], -M[i][j]);
        const std::uint64_t k = static_cast<std::uint64_t>(M[i][i]);
        const double radius = std::pow(std::abs(rhs), 1.0 / static_cast<double>(k));
        const double theta = std::arg(rhs) / static_cast<double>(k);
        for (std::uint64_t m = 0; m < k; ++m) {
            const double phi =
                theta + 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(k);
            x[i] = radius * Complex(std::cos(phi), std::sin(phi));
            if (i == 0) {
                out.push_back(x);
            } else {
                self(self, i);
            }
        }
    };
    descend(descend, n);
    if (out.size() != total)
        throw std::logic_error("binomial system: wrong solution count");
    return out;
}

}  // namespace

Seq<CVec> solve_binomial_cell(const MixedCell& cell,
                              const std::vector<std::array<Complex, 2>>& edge_coeffs) {
    const std::size_t n = cell.edges.size();
    if (edge_coeffs.size() != n)
        throw std::invalid_argument("solve_binomial_cell: coefficient count mismatch");
    for (const auto& c : edge_coeffs) {
        if (c[0] == Complex(0.0) || c[1] == Complex(0.0))
            throw std::invalid_argument("solve_binomial_cell: zero coefficient on an edge endpoint");
    }
    auto cellp = std::make_shared<const MixedCell>(cell);
    auto coeffs = std::make_shared<const std::vector<std::array<Complex, 2>>>(edge_coeffs);

    return Seq<CVec>([cellp, coeffs, n] {
        std::shared_ptr<std::vector<CVec>> sols;
        std::size_t i = 0;
        return [cellp, coeffs, n, sols, i]() mutable -> std::optional<CVec> {
            if (!sols) {
                g_binomial_solves.fetch_add(1);
                std::vector<std::vector<std::int64_t>> M(n, std::vector<std::int64_t>(n));
                CVec b(n);
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& [u, v] = cellp->edges[j];
                    for (std::size_t l = 0; l < n; ++l) M[j][l] = v[l] - u[l];
                    b[j] = -(*coeffs)[j][0] / (*coeffs)[j][1];
                }
                sols = std::make_shared<std::vector<CVec>>(torus_solve(std::move(M), std::move(b)));
            }
            if (i >= sols->size()) return std::nullopt;
            return (*sols)[i++];
        };
    });
}

Seq<std::pair<CVec, MixedCell>> polyhedral_start_iter(unsigned n,
                                                      const std::vector<CVec>& support_coeffs) {
    if (support_coeffs.size() != n)
        throw std::invalid_argument("polyhedral_start_iter: need one coefficient vector per equation");
    for (const CVec& c : support_coeffs) {
        if (c.size() != (std::size_t{1} << n))
            throw std::invalid_argument("polyhedral_start_iter: coefficient vector length must be 2^n");
    }
    auto coeffs = std::make_shared<const std::vector<CVec>>(support_coeffs);

    Seq<Seq<std::pair<CVec, MixedCell>>> per_cell = map_lazy(
        [coeffs, n](const MixedCell& cell) {
            std::vector<std::array<Complex, 2>> edge_coeffs(n);
            for (std::size_t j = 0; j < n; ++j) {
                edge_coeffs[j] = {(*coeffs)[j][cell.edge_indices[j].first],
                                  (*coeffs)[j][cell.edge_indices[j].second]};
            }
            return map_lazy([cell](const CVec& z) { return std::make_pair(z, cell); },
                            solve_binomial_cell(cell, edge_coeffs));
        },
        mixed_cell_iter(n));
    return flatten(std::move(per_cell));
}

std::uint64_t binomial_solve_count() { return g_binomial_solves.load(); }
void reset_binomial_solve_count() { g_binomial_solves.store(0); }

}  // namespace hc
