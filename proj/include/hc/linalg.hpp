#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hc {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

double norm2(const CVec& v);
double max_abs_imag(const CVec& v);
bool all_finite(const CVec& v);

// Dense row-major complex matrix.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Complex>& data() { return a_; }
    const std::vector<Complex>& data() const { return a_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> a_;
};

// Partial-pivot LU factorization of a square complex matrix.
//
// condition_estimate() is the cheap pivot-ratio proxy max|pivot|/min|pivot|,
// not a true condition number; it is infinite when the factorization broke
// down on a (numerically) zero pivot.
class Lu {
  public:
    explicit Lu(CMatrix a);

    bool singular() const { return singular_; }
    double condition_estimate() const;

    // Solves A x = rhs in place. Returns false when the matrix is singular.
    bool solve(CVec& rhs) const;

  private:
    CMatrix a_;
    std::vector<std::size_t> perm_;
    bool singular_ = false;
    double max_pivot_ = 0.0;
    double min_pivot_ = 0.0;
};

}  // namespace hc
