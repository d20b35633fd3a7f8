#include "hc/homotopy.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace hc {

namespace {

constexpr double kEndpointTol = 1e-12;

using JacPolys = std::vector<std::vector<Polynomial>>;

JacPolys differentiate_vars(const PolySystem& F) {
    JacPolys J(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
        J[i].reserve(F.variable_count());
        for (std::size_t j = 0; j < F.variable_count(); ++j)
            J[i].push_back(F.polynomial(i).derivative_var(j));
    }
    return J;
}

JacPolys differentiate_params(const PolySystem& F) {
    JacPolys J(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
        J[i].reserve(F.parameter_count());
        for (std::size_t j = 0; j < F.parameter_count(); ++j)
            J[i].push_back(F.polynomial(i).derivative_param(j));
    }
    return J;
}

void check_t(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("homotopy: t outside [0,1]");
}

}  // namespace

struct Homotopy::Impl {
    HomotopyKind kind;
    std::size_t nvars = 0;

    // StraightLine / Coefficient: target at t=0, start at t=1 (gamma applied
    // for StraightLine evaluation, already folded into `start` otherwise).
    PolySystem target;
    PolySystem start;
    Complex gamma = 1.0;
    JacPolys target_jac;
    JacPolys start_jac;

    // Parameter
    PolySystem family;
    CVec q_start;
    CVec p_target;
    JacPolys family_jac_x;
    JacPolys family_jac_p;

    // Concatenation
    std::shared_ptr<const Impl> first;
    std::shared_ptr<const Impl> second;

    CVec eval(const CVec& x, double t) const;
    CMatrix jacobian_x(const CVec& x, double t) const;
    CVec dt(const CVec& x, double t) const;
};

Homotopy Homotopy::straight_line(PolySystem F, PolySystem G, Complex gamma) {
    if (gamma == Complex(0.0, 0.0))
        throw std::invalid_argument("straight_line: gamma must be nonzero");
    if (F.is_parameterized() || G.is_parameterized())
        throw std::invalid_argument("straight_line: systems must be parameter-free");
    if (F.size() != G.size() || F.variable_count() != G.variable_count())
        throw std::invalid_argument("straight_line: shape mismatch");

    auto impl = std::make_shared<Impl>();
    impl->kind = HomotopyKind::StraightLine;
    impl->nvars = F.variable_count();
    impl->gamma = gamma;
    impl->target_jac = differentiate_vars(F);
    impl->start_jac = differentiate_vars(G);
    impl->target = std::move(F);
    impl->start = std::move(G);
    return Homotopy(std::move(impl));
}

Homotopy Homotopy::parameter(PolySystem F, CVec q_start, CVec p_target) {
    if (!F.is_parameterized())
        throw std::invalid_argument("parameter homotopy: system has no parameters");
    if (q_start.size() != F.parameter_count() || p_target.size() != F.parameter_count())
        throw std::invalid_argument("parameter homotopy: parameter dimension mismatch");

    auto impl = std::make_shared<Impl>();
    impl->kind = HomotopyKind::Parameter;
    impl->nvars = F.variable_count();
    impl->family_jac_x = differentiate_vars(F);
    impl->family_jac_p = differentiate_params(F);
    impl->family = std::move(F);
    impl->q_start = std::move(q_start);
    impl->p_target = std::move(p_target);
    return Homotopy(std::move(impl));
}

Homotopy Homotopy::coefficient(std::vector<std::string> variables,
                               std::vector<std::vector<Monomial>> support,
                               std::vector<CVec> c_start, std::vector<CVec> c_target) {
    const std::size_t n = variables.size();
    if (support.size() != n || c_start.size() != n || c_target.size() != n)
        throw std::invalid_argument("coefficient homotopy: shape mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (c_start[i].size() != support[i].size() || c_target[i].size() != support[i].size())
            throw std::invalid_argument("coefficient homotopy: coefficient vectors do not match support");
    }

    auto build = [&](const std::vector<CVec>& coeffs) {
        std::vector<Polynomial> polys;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Term> terms;
            for (std::size_t k = 0; k < support[i].size(); ++k) {
                if (support[i][k].size() != n)
                    throw std::invalid_argument("coefficient homotopy: support exponent length mismatch");
                terms.push_back(Term{coeffs[i][k], support[i][k], Monomial(0)});
            }
            polys.push_back(Polynomial::from_terms(n, 0, std::move(terms)));
        }
        return PolySystem(std::move(polys), variables);
    };

    auto impl = std::make_shared<Impl>();
    impl->kind = HomotopyKind::Coefficient;
    impl->nvars = n;
    impl->target = build(c_target);
    impl->start = build(c_start);
    impl->target_jac = differentiate_vars(impl->target);
    impl->start_jac = differentiate_vars(impl->start);
    return Homotopy(std::move(impl));
}

Homotopy Homotopy::concatenate(Homotopy first, Homotopy second) {
    if (first.variable_count() != second.variable_count())
        throw std::invalid_argument("concatenate: variable count mismatch");
    if (max_coefficient_distance(first.target_system(), second.start_system()) > kEndpointTol)
        throw std::invalid_argument("concatenate: endpoint systems disagree");

    auto impl = std::make_shared<Impl>();
    impl->kind = HomotopyKind::Concatenation;
    impl->nvars = first.variable_count();
    impl->first = first.impl_;
    impl->second = second.impl_;
    return Homotopy(std::move(impl));
}

HomotopyKind Homotopy::kind() const { return impl_->kind; }

std::size_t Homotopy::variable_count() const { return impl_->nvars; }

CVec Homotopy::Impl::eval(const CVec& x, double t) const {
    switch (kind) {
        case HomotopyKind::StraightLine:
        case HomotopyKind::Coefficient: {
            const Complex g = (kind == HomotopyKind::StraightLine) ? gamma : Complex(1.0);
            CVec out(nvars);
            for (std::size_t i = 0; i < nvars; ++i) {
                out[i] = (1.0 - t) * target.polynomial(i).evaluate(x) +
                         g * t * start.polynomial(i).evaluate(x);
            }
            return out;
        }
        case HomotopyKind::Parameter: {
            CVec p(q_start.size());
            for (std::size_t j = 0; j < p.size(); ++j)
                p[j] = (1.0 - t) * p_target[j] + t * q_start[j];
            return hc::evaluate(family, x, p);
        }
        case HomotopyKind::Concatenation:
            return t >= 0.5 ? first->eval(x, 2.0 * t - 1.0) : second->eval(x, 2.0 * t);
    }
    throw std::logic_error("unreachable");
}

CMatrix Homotopy::Impl::jacobian_x(const CVec& x, double t) const {
    switch (kind) {
        case HomotopyKind::StraightLine:
        case HomotopyKind::Coefficient: {
            const Complex g = (kind == HomotopyKind::StraightLine) ? gamma : Complex(1.0);
            CMatrix J(nvars, nvars);
            for (std::size_t i = 0; i < nvars; ++i)
                for (std::size_t j = 0; j < nvars; ++j)
                    J.at(i, j) = (1.0 - t) * target_jac[i][j].evaluate(x) +
                                 g * t * start_jac[i][j].evaluate(x);
            return J;
        }
        case HomotopyKind::Parameter: {
            CVec p(q_start.size());
            for (std::size_t j = 0; j < p.size(); ++j)
                p[j] = (1.0 - t) * p_target[j] + t * q_start[j];
            CMatrix J(nvars, nvars);
            for (std::size_t i = 0; i < nvars; ++i)
                for (std::size_t j = 0; j < nvars; ++j)
                    J.at(i, j) = family_jac_x[i][j].evaluate(x, p);
            return J;
        }
        case HomotopyKind::Concatenation:
            return t >= 0.5 ? first->jacobian_x(x, 2.0 * t - 1.0) : second->jacobian_x(x, 2.0 * t);
    }
    throw std::logic_error("unreachable");
}

CVec Homotopy::Impl::dt(const CVec& x, double t) const {
    switch (kind) {
        case HomotopyKind::StraightLine:
        case HomotopyKind::Coefficient: {
            const Complex g = (kind == HomotopyKind::StraightLine) ? gamma : Complex(1.0);
            CVec out(nvars);
            for (std::size_t i = 0; i < nvars; ++i) {
                out[i] = g * start.polynomial(i).evaluate(x) - target.polynomial(i).evaluate(x);
            }
            return out;
        }
        case HomotopyKind::Parameter: {
            CVec p(q_start.size());
            for (std::size_t j = 0; j < p.size(); ++j)
                p[j] = (1.0 - t) * p_target[j] + t * q_start[j];
            CVec out(nvars, Complex(0.0));
            for (std::size_t i = 0; i < nvars; ++i) {
                for (std::size_t j = 0; j < q_start.size(); ++j) {
                    out[i] += family_jac_p[i][j].evaluate(x, p) * (q_start[j] - p_target[j]);
                }
            }
            return out;
        }
        case HomotopyKind::Concatenation: {
            CVec out = t >= 0.5 ? first->dt(x, 2.0 * t - 1.0) : second->dt(x, 2.0 * t);
            for (Complex& z : out) z *= 2.0;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

CVec Homotopy::eval(const CVec& x, double t) const {
    check_t(t);
    if (x.size() != impl_->nvars) throw std::invalid_argument("homotopy eval: dimension mismatch");
    return impl_->eval(x, t);
}

CMatrix Homotopy::jacobian_x(const CVec& x, double t) const {
    check_t(t);
    if (x.size() != impl_->nvars) throw std::invalid_argument("homotopy eval: dimension mismatch");
    return impl_->jacobian_x(x, t);
}

CVec Homotopy::dt(const CVec& x, double t) const {
    check_t(t);
    if (x.size() != impl_->nvars) throw std::invalid_argument("homotopy eval: dimension mismatch");
    return impl_->dt(x, t);
}

PolySystem Homotopy::start_system() const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case HomotopyKind::StraightLine: return scale_system(im.start, im.gamma);
        case HomotopyKind::Coefficient: return im.start;
        case HomotopyKind::Parameter: return specialize(im.family, im.q_start);
        case HomotopyKind::Concatenation: return Homotopy(im.first).start_system();
    }
    throw std::logic_error("unreachable");
}

PolySystem Homotopy::target_system() const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case HomotopyKind::StraightLine:
        case HomotopyKind::Coefficient: return im.target;
        case HomotopyKind::Parameter: return specialize(im.family, im.p_target);
        case HomotopyKind::Concatenation: return Homotopy(im.second).target_system();
    }
    throw std::logic_error("unreachable");
}

Complex random_unit_gamma(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double theta = unif(rng) * 2.0 * std::numbers::pi;
    return Complex(std::cos(theta), std::sin(theta));
}

}  // namespace hc
