#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hc/polysys.hpp"

namespace hc {

enum class HomotopyKind { StraightLine, Parameter, Coefficient, Concatenation };

// An evaluable family H(x;t), t in [0,1], with t = 1 the start system and
// t = 0 the target system. Immutable and shareable; evaluation is reentrant.
class Homotopy {
  public:
    // (1-t) F(x) + gamma t G(x)
    static Homotopy straight_line(PolySystem F, PolySystem G, Complex gamma);

    // F(x; (1-t) p_target + t q_start)
    static Homotopy parameter(PolySystem F, CVec q_start, CVec p_target);

    // Coefficients interpolate (1-t) c_target + t c_start on a shared support.
    static Homotopy coefficient(std::vector<std::string> variables,
                                std::vector<std::vector<Monomial>> support,
                                std::vector<CVec> c_start, std::vector<CVec> c_target);

    // Piecewise: first on t in [1/2,1] (reparameterized 2t-1), second on
    // [0,1/2] (reparameterized 2t). Requires first's target to equal second's
    // start coefficientwise within 1e-12.
    static Homotopy concatenate(Homotopy first, Homotopy second);

    HomotopyKind kind() const;
    std::size_t variable_count() const;

    CVec eval(const CVec& x, double t) const;
    CMatrix jacobian_x(const CVec& x, double t) const;
    // dH/dt; for concatenations this includes the factor-2 reparameterization.
    CVec dt(const CVec& x, double t) const;

    PolySystem start_system() const;   // system at t = 1 (gamma folded in)
    PolySystem target_system() const;  // system at t = 0

  private:
    struct Impl;
    explicit Homotopy(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// Uniformly random point on the unit circle; the gamma trick.
Complex random_unit_gamma(std::uint64_t seed);

}  // namespace hc
