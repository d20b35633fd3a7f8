#pragma once

// Test fixture: the five-conics tangency system in the affine chart where no
// conic passes through the origin. 15 variables (b1..b5, u1..u5, v1..v5), 30
// parameters a[i][j] (column-major; the sixth column is declared but unused
// because each conic's constant term is normalized to 1), 15 equations: for
// each of the five given conics the solution conic passes through (u_i, v_i),
// the given conic passes through it too, and the gradients are parallel.

#include <string>
#include <vector>

#include "hc/polysys.hpp"

namespace fixtures {

inline hc::PolySystem steiner_conics() {
    using hc::Complex;
    using hc::Monomial;
    using hc::Polynomial;
    using hc::Term;

    const std::size_t nv = 15;  // b:0..4, u:5..9, v:10..14
    const std::size_t np = 30;  // a[i][j] at (j*5 + i), i conic row, j column

    const auto b = [&](std::size_t k) { return k; };
    const auto u = [&](std::size_t i) { return 5 + i; };
    const auto v = [&](std::size_t i) { return 10 + i; };
    const auto a = [&](std::size_t i, std::size_t j) { return j * 5 + i; };

    // one term: coefficient, variable exponents, optional parameter slot
    const auto term = [&](double c, std::vector<std::pair<std::size_t, std::uint32_t>> vars,
                          int param = -1) {
        Monomial m(nv), pm(np);
        for (const auto& [idx, e] : vars) m.e[idx] += e;
        if (param >= 0) pm.e[static_cast<std::size_t>(param)] = 1;
        return Term{Complex(c), std::move(m), std::move(pm)};
    };

    std::vector<Polynomial> eqs;
    for (std::size_t i = 0; i < 5; ++i) {
        // S_i: the unknown conic through (u_i, v_i)
        const Polynomial S = Polynomial::from_terms(
            nv, np,
            {term(1.0, {{b(0), 1}, {u(i), 2}}), term(1.0, {{b(1), 1}, {u(i), 1}, {v(i), 1}}),
             term(1.0, {{b(2), 1}, {v(i), 2}}), term(1.0, {{b(3), 1}, {u(i), 1}}),
             term(1.0, {{b(4), 1}, {v(i), 1}}), term(1.0, {})});
        // C_i: the i-th given conic through (u_i, v_i)
        const Polynomial C = Polynomial::from_terms(
            nv, np,
            {term(1.0, {{u(i), 2}}, static_cast<int>(a(i, 0))),
             term(1.0, {{u(i), 1}, {v(i), 1}}, static_cast<int>(a(i, 1))),
             term(1.0, {{v(i), 2}}, static_cast<int>(a(i, 2))),
             term(1.0, {{u(i), 1}}, static_cast<int>(a(i, 3))),
             term(1.0, {{v(i), 1}}, static_cast<int>(a(i, 4))), term(1.0, {})});
        // D_i: tangency, det of the two gradients at (u_i, v_i)
        const Polynomial D = S.derivative_var(u(i)) * C.derivative_var(v(i)) -
                             S.derivative_var(v(i)) * C.derivative_var(u(i));
        eqs.push_back(S);
        eqs.push_back(C);
        eqs.push_back(D);
    }

    std::vector<std::string> vars;
    for (int k = 1; k <= 5; ++k) vars.push_back("b" + std::to_string(k));
    for (int k = 1; k <= 5; ++k) vars.push_back("u" + std::to_string(k));
    for (int k = 1; k <= 5; ++k) vars.push_back("v" + std::to_string(k));
    std::vector<std::string> params;
    for (int j = 1; j <= 6; ++j) {
        for (int i = 1; i <= 5; ++i) params.push_back("a" + std::to_string(i) + std::to_string(j));
    }
    return hc::PolySystem(std::move(eqs), std::move(vars), std::move(params));
}

}  // namespace fixtures
