#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hc/linalg.hpp"

namespace hc {

// Raised by parse_system with a human-readable location in what().
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exponent vector. Length always equals the variable (or parameter) count of
// the owning polynomial.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    static Monomial unit(std::size_t n, std::size_t j, std::uint32_t power = 1) {
        Monomial m(n);
        m.e[j] = power;
        return m;
    }

    std::size_t size() const { return e.size(); }
    unsigned total_degree() const;

    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded-lexicographic order (higher total degree first, then lexicographic
// with larger exponent vectors first). Keeps term lists canonical.
bool grlex_less(const Monomial& a, const Monomial& b);

// One term c * p^params * x^vars. `params` is the all-zero monomial for
// parameter-free polynomials.
struct Term {
    Complex c;
    Monomial vars;
    Monomial params;
};

// Sparse multivariate polynomial over the complex numbers, optionally with
// coefficients that are themselves monomial expressions in a parameter vector.
// Terms are stored sorted (canonical), combined, and never exactly zero.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::size_t variable_count, std::size_t parameter_count)
        : nvars_(variable_count), npars_(parameter_count) {}

    static Polynomial from_terms(std::size_t variable_count, std::size_t parameter_count,
                                 std::vector<Term> terms);
    static Polynomial constant(std::size_t variable_count, std::size_t parameter_count, Complex c);
    static Polynomial variable(std::size_t variable_count, std::size_t parameter_count,
                               std::size_t j, std::uint32_t power = 1);

    std::size_t variable_count() const { return nvars_; }
    std::size_t parameter_count() const { return npars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Max total degree in the variables; 0 for the zero polynomial.
    unsigned degree() const;

    Complex evaluate(const CVec& x) const;
    Complex evaluate(const CVec& x, const CVec& p) const;

    Polynomial derivative_var(std::size_t j) const;
    Polynomial derivative_param(std::size_t j) const;

    // Folds the parameter part of every coefficient, yielding a
    // parameter-free polynomial in the same variables.
    Polynomial substitute_params(const CVec& p) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(Complex s) const;

    // Multiply by the parameter monomial p_j (used when assembling systems
    // whose coefficients are parameters).
    Polynomial times_param(std::size_t j) const;

    // Terms with exponent > max_exp in variable j removed.
    Polynomial truncated_in_var(std::size_t j, std::uint32_t max_exp) const;

    // Sub-polynomial multiplying x_j^power, with that exponent zeroed out.
    Polynomial coefficient_of(std::size_t j, std::uint32_t power) const;

    // Removes variable slot j; every term must have exponent 0 there.
    Polynomial drop_var(std::size_t j) const;

  private:
    std::size_t nvars_ = 0;
    std::size_t npars_ = 0;
    std::vector<Term> terms_;
};

// Square sparse polynomial system, optionally parameterized. Immutable after
// construction; safe to share across threads.
class PolySystem {
  public:
    PolySystem() = default;
    PolySystem(std::vector<Polynomial> polynomials, std::vector<std::string> variables,
               std::vector<std::string> parameters = {});

    std::size_t size() const { return polys_.size(); }
    std::size_t variable_count() const { return variables_.size(); }
    std::size_t parameter_count() const { return parameters_.size(); }
    bool is_parameterized() const { return !parameters_.empty(); }

    const Polynomial& polynomial(std::size_t i) const { return polys_[i]; }
    const std::vector<Polynomial>& polynomials() const { return polys_; }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<std::string>& parameters() const { return parameters_; }

  private:
    std::vector<Polynomial> polys_;
    std::vector<std::string> variables_;
    std::vector<std::string> parameters_;
};

PolySystem parse_system(const std::string& text);
std::string serialize_system(const PolySystem& F);

CVec evaluate(const PolySystem& F, const CVec& x);
CVec evaluate(const PolySystem& F, const CVec& x, const CVec& p);

// Entry (i,j) = d f_i / d x_j, by exact symbolic term differentiation.
CMatrix jacobian(const PolySystem& F, const CVec& x);
CMatrix jacobian(const PolySystem& F, const CVec& x, const CVec& p);

std::vector<unsigned> degrees(const PolySystem& F);

PolySystem specialize(const PolySystem& F, const CVec& p);

// The cyclic n-roots system: the n-1 cyclic sums plus x_0...x_{n-1} - 1.
PolySystem cyclic_system(unsigned n);

PolySystem scale_system(const PolySystem& F, Complex s);

// Largest coefficientwise distance between two systems over the union of
// their supports (relative to 1 + coefficient magnitude). Infinite when the
// shapes disagree. Parameterized systems compare parameter monomials too.
double max_coefficient_distance(const PolySystem& A, const PolySystem& B);

std::vector<std::string> default_variable_names(std::size_t n, const std::string& stem = "x");

}  // namespace hc
