#include "hc/startsys.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace hc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit_root(unsigned k, unsigned n) {
    if (k == 0) return Complex(1.0, 0.0);
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    return Complex(std::cos(theta), std::sin(theta));
}

std::uint64_t checked_product(const std::vector<unsigned>& degrees) {
    std::uint64_t p = 1;
    for (unsigned d : degrees) {
        if (d == 0) throw std::invalid_argument("degree must be at least 1");
        p *= d;
    }
    return p;
}

}  // namespace

Seq<Complex> roots_of_unity_iter(unsigned n) {
    if (n == 0) throw std::invalid_argument("roots_of_unity_iter: n must be at least 1");
    return Seq<Complex>([n] {
        unsigned k = 0;
        return [n, k]() mutable -> std::optional<Complex> {
            if (k >= n) return std::nullopt;
            return unit_root(k++, n);
        };
    });
}

PolySystem total_degree_system(const std::vector<unsigned>& degrees, Complex gamma,
                               std::vector<std::string> variables) {
    if (degrees.empty()) throw std::invalid_argument("total_degree_system: empty degrees");
    checked_product(degrees);
    const std::size_t n = degrees.size();
    if (variables.empty()) variables = default_variable_names(n);
    if (variables.size() != n) throw std::invalid_argument("total_degree_system: name count mismatch");

    std::vector<Polynomial> polys;
    polys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        polys.push_back(Polynomial::from_terms(
            n, 0,
            {Term{gamma, Monomial::unit(n, i, degrees[i]), Monomial(0)},
             Term{-gamma, Monomial(n), Monomial(0)}}));
    }
    return PolySystem(std::move(polys), std::move(variables));
}

Seq<CVec> total_degree_start_iter(std::vector<unsigned> degrees) {
    const std::uint64_t total = checked_product(degrees);
    return Seq<CVec>([degrees, total] {
        std::uint64_t k = 0;
        return [degrees, total, k]() mutable -> std::optional<CVec> {
            if (k >= total) return std::nullopt;
            CVec tuple(degrees.size());
            std::uint64_t rest = k;
            for (std::size_t i = 0; i < degrees.size(); ++i) {
                tuple[i] = unit_root(static_cast<unsigned>(rest % degrees[i]), degrees[i]);
                rest /= degrees[i];
            }
            ++k;
            return tuple;
        };
    });
}

std::vector<unsigned> indices_of_entries(const CVec& z, const std::vector<unsigned>& degrees) {
    if (z.size() != degrees.size())
        throw std::invalid_argument("indices_of_entries: dimension mismatch");
    std::vector<unsigned> ind(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const unsigned d = degrees[i];
        if (d == 0) throw std::invalid_argument("degree must be at least 1");
        const double a = std::arg(z[i]) / kTwoPi * static_cast<double>(d);
        const double rounded = std::round(a);
        if (std::abs(a - rounded) > 0.25 || std::abs(std::abs(z[i]) - 1.0) > 0.25) {
            std::ostringstream msg;
            msg << "index resolution failed: coordinate " << i << " = (" << z[i].real() << ", "
                << z[i].imag() << ") is not close to a " << d << "-th root of unity";
            throw IndexResolutionError(msg.str());
        }
        const long long m = static_cast<long long>(rounded) % static_cast<long long>(d);
        ind[i] = static_cast<unsigned>(m >= 0 ? m : m + static_cast<long long>(d));
    }
    return ind;
}

std::size_t bezout_index(const CVec& z, const std::vector<unsigned>& degrees) {
    const std::vector<unsigned> ind = indices_of_entries(z, degrees);
    std::size_t bi = 0;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < ind.size(); ++i) {
        bi += stride * ind[i];
        stride *= degrees[i];
    }
    return bi + 1;
}

namespace {

// True when s is strictly smaller than every nontrivial rotation of itself:
// exactly the canonical representatives of aperiodic rotation classes.
bool canonical_aperiodic(const std::vector<char>& s) {
    const std::size_t d = s.size();
    for (std::size_t k = 1; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            const char a = s[i];
            const char b = s[(i + k) % d];
            if (a != b) {
                if (b < a) return false;  // a smaller rotation exists
                break;
            }
            if (i + 1 == d) return false;  // equal rotation: periodic
        }
    }
    return true;
}

Necklace necklace_from_string(const std::vector<char>& s) {
    Necklace n;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i]) {
            n.black.push_back(static_cast<unsigned>(i));
        } else {
            n.white.push_back(static_cast<unsigned>(i));
        }
    }
    return n;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return static_cast<std::uint64_t>(r);
}

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

Seq<Necklace> necklaces_iter(unsigned d1, unsigned d2) {
    if (d1 == 0 || d2 == 0) throw std::invalid_argument("necklaces_iter: both bead counts must be positive");
    const unsigned d = d1 + d2;
    return Seq<Necklace>([d2, d] {
        // binary strings with d2 ones, in increasing lexicographic order
        std::vector<char> s(d, 0);
        std::fill(s.begin() + (d - d2), s.end(), 1);
        bool exhausted = false;
        return [s, exhausted]() mutable -> std::optional<Necklace> {
            while (!exhausted) {
                const bool keep = canonical_aperiodic(s);
                std::optional<Necklace> out;
                if (keep) out = necklace_from_string(s);
                exhausted = !std::next_permutation(s.begin(), s.end());
                if (out) return out;
            }
            return std::nullopt;
        };
    });
}

std::uint64_t necklace_count(unsigned d1, unsigned d2) {
    if (d1 == 0 || d2 == 0) throw std::invalid_argument("necklace_count: both bead counts must be positive");
    const unsigned d = d1 + d2;
    if (d > 64) throw std::invalid_argument("necklace_count: at most 64 beads");
    const unsigned g = std::gcd(d1, d2);
    long long sum = 0;
    for (unsigned e = 1; e <= g; ++e) {
        if (g % e != 0) continue;
        sum += static_cast<long long>(moebius(e)) * static_cast<long long>(binomial(d / e, d1 / e));
    }
    return static_cast<std::uint64_t>(sum / d);
}

PolySystem polynomial_interpolants(unsigned d1, unsigned d2) {
    if (d1 == 0 || d2 == 0)
        throw std::invalid_argument("polynomial_interpolants: degrees must be positive");
    const unsigned d = d1 + d2;
    const std::size_t nv = d;       // a_1..a_{d1}, b_1..b_{d2}
    const std::size_t tpos = nv;    // auxiliary truncation variable
    const std::size_t nall = nv + 1;

    auto curve_poly = [&](std::size_t offset, unsigned count) {
        std::vector<Term> terms;
        for (unsigned i = 1; i <= count; ++i) {
            Monomial m(nall);
            m.e[offset + i - 1] = 1;
            m.e[tpos] = i;
            terms.push_back(Term{1.0, std::move(m), Monomial(d)});
        }
        return Polynomial::from_terms(nall, d, std::move(terms));
    };

    const Polynomial x_of_t = curve_poly(0, d1);
    const Polynomial y_of_t = curve_poly(d1, d2);

    // f = y(t) - sum_i c_i x(t)^i, truncated beyond t^{d-1}
    Polynomial f = y_of_t;
    Polynomial xpow = Polynomial::constant(nall, d, 1.0);
    for (unsigned i = 1; i <= d; ++i) {
        xpow = (xpow * x_of_t).truncated_in_var(tpos, d - 1);
        if (xpow.is_zero()) break;
        f = f - xpow.times_param(i - 1);
    }

    std::vector<Polynomial> eqs;
    eqs.reserve(d);
    for (unsigned i = 1; i <= d - 1; ++i) {
        eqs.push_back(f.coefficient_of(tpos, i).drop_var(tpos));
    }
    eqs.push_back(Polynomial::variable(nv, d, 0) - Polynomial::constant(nv, d, 1.0));

    std::vector<std::string> vars;
    for (unsigned i = 1; i <= d1; ++i) vars.push_back("a" + std::to_string(i));
    for (unsigned i = 1; i <= d2; ++i) vars.push_back("b" + std::to_string(i));
    std::vector<std::string> params;
    for (unsigned i = 1; i <= d; ++i) params.push_back("c" + std::to_string(i));

    return PolySystem(std::move(eqs), std::move(vars), std::move(params));
}

CVec solution_from_necklace(const Necklace& N) {
    const unsigned d = N.d();
    if (d == 0 || N.white.empty() || N.black.empty())
        throw std::invalid_argument("solution_from_necklace: invalid necklace");

    auto expand = [&](const std::vector<unsigned>& beads) {
        // coefficients of prod_k (alpha_k t + 1), alpha_k = exp(2 pi i k / d)
        CVec c(beads.size() + 1, Complex(0.0));
        c[0] = 1.0;
        std::size_t used = 0;
        for (unsigned k : beads) {
            const Complex alpha = unit_root(k, d);
            ++used;
            for (std::size_t j = used; j-- > 0;) {
                c[j + 1] += alpha * c[j];
            }
        }
        return c;
    };

    const CVec avec = expand(N.white);
    const CVec bvec = expand(N.black);
    if (std::abs(avec[1]) < 1e-12)
        throw std::runtime_error("solution_from_necklace: leading coefficient vanishes, cannot normalize");

    const Complex reparam = 1.0 / avec[1];
    CVec out;
    out.reserve(d);
    Complex r = 1.0;
    for (std::size_t i = 1; i < avec.size(); ++i) {
        r *= reparam;
        out.push_back(avec[i] * r);
    }
    r = 1.0;
    for (std::size_t i = 1; i < bvec.size(); ++i) {
        r *= reparam;
        out.push_back(bvec[i] * r);
    }
    return out;
}

}  // namespace hc
