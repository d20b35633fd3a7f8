#include "hc/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace hc {

double norm2(const CVec& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs_imag(const CVec& v) {
    double m = 0.0;
    for (const Complex& z : v) m = std::max(m, std::abs(z.imag()));
    return m;
}

bool all_finite(const CVec& v) {
    for (const Complex& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

Lu::Lu(CMatrix a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols()) throw std::invalid_argument("Lu: matrix must be square");
    const std::size_t n = a_.rows();
    perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

    max_pivot_ = 0.0;
    min_pivot_ = std::numeric_limits<double>::infinity();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a_.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a_.at(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (!(best > 0.0) || !std::isfinite(best)) {
            singular_ = true;
            min_pivot_ = 0.0;
            return;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a_.at(k, j), a_.at(piv, j));
            std::swap(perm_[k], perm_[piv]);
        }
        max_pivot_ = std::max(max_pivot_, best);
        min_pivot_ = std::min(min_pivot_, best);

        const Complex inv = 1.0 / a_.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex m = a_.at(i, k) * inv;
            a_.at(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) a_.at(i, j) -= m * a_.at(k, j);
        }
    }
}

double Lu::condition_estimate() const {
    if (singular_ || min_pivot_ == 0.0) return std::numeric_limits<double>::infinity();
    if (a_.rows() == 0) return 1.0;
    return max_pivot_ / min_pivot_;
}

bool Lu::solve(CVec& rhs) const {
    if (singular_) return false;
    const std::size_t n = a_.rows();
    if (rhs.size() != n) throw std::invalid_argument("Lu::solve: dimension mismatch");

    CVec b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = rhs[perm_[i]];

    // forward substitution with unit lower triangle
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = b[i];
        for (std::size_t j = 0; j < i; ++j) s -= a_.at(i, j) * b[j];
        b[i] = s;
    }
    // back substitution
    for (std::size_t ii = n; ii-- > 0;) {
        Complex s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= a_.at(ii, j) * b[j];
        b[ii] = s / a_.at(ii, ii);
    }
    rhs = std::move(b);
    return true;
}

}  // namespace hc
