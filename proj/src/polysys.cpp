#include "hc/polysys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace hc {

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (std::uint32_t k : e) d += k;
    return d;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
}

namespace {

// Canonical term order: leading (grlex-largest) variable monomial first,
// parameter monomial as tie breaker.
bool term_before(const Term& s, const Term& t) {
    if (!(s.vars == t.vars)) return grlex_less(t.vars, s.vars);
    return grlex_less(t.params, s.params);
}

Complex int_pow(Complex base, std::uint32_t k) {
    Complex r = 1.0;
    while (k > 0) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

Complex mono_eval(const Monomial& m, const CVec& v) {
    Complex r = 1.0;
    for (std::size_t j = 0; j < m.e.size(); ++j) {
        if (m.e[j] != 0) r *= int_pow(v[j], m.e[j]);
    }
    return r;
}

}  // namespace

Polynomial Polynomial::from_terms(std::size_t nvars, std::size_t npars, std::vector<Term> terms) {
    for (Term& t : terms) {
        if (t.vars.size() != nvars) throw std::invalid_argument("term exponent length mismatch");
        if (t.params.size() == 0 && npars > 0) t.params = Monomial(npars);
        if (t.params.size() != npars) throw std::invalid_argument("term parameter exponent length mismatch");
    }
    std::sort(terms.begin(), terms.end(), term_before);
    std::vector<Term> combined;
    combined.reserve(terms.size());
    for (Term& t : terms) {
        if (!combined.empty() && combined.back().vars == t.vars && combined.back().params == t.params) {
            combined.back().c += t.c;
        } else {
            combined.push_back(std::move(t));
        }
    }
    std::erase_if(combined, [](const Term& t) { return t.c == Complex(0.0, 0.0); });

    Polynomial p(nvars, npars);
    p.terms_ = std::move(combined);
    return p;
}

Polynomial Polynomial::constant(std::size_t nvars, std::size_t npars, Complex c) {
    return from_terms(nvars, npars, {Term{c, Monomial(nvars), Monomial(npars)}});
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t npars, std::size_t j,
                                std::uint32_t power) {
    return from_terms(nvars, npars, {Term{1.0, Monomial::unit(nvars, j, power), Monomial(npars)}});
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.vars.total_degree());
    return d;
}

Complex Polynomial::evaluate(const CVec& x) const {
    if (npars_ != 0) throw std::invalid_argument("parameterized polynomial needs parameter values");
    if (x.size() != nvars_) throw std::invalid_argument("evaluate: dimension mismatch");
    Complex s = 0.0;
    for (const Term& t : terms_) s += t.c * mono_eval(t.vars, x);
    return s;
}

Complex Polynomial::evaluate(const CVec& x, const CVec& p) const {
    if (x.size() != nvars_ || p.size() != npars_)
        throw std::invalid_argument("evaluate: dimension mismatch");
    Complex s = 0.0;
    for (const Term& t : terms_) s += t.c * mono_eval(t.params, p) * mono_eval(t.vars, x);
    return s;
}

Polynomial Polynomial::derivative_var(std::size_t j) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.vars.e[j] == 0) continue;
        Term d = t;
        d.c *= static_cast<double>(t.vars.e[j]);
        d.vars.e[j] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(nvars_, npars_, std::move(out));
}

Polynomial Polynomial::derivative_param(std::size_t j) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.params.e[j] == 0) continue;
        Term d = t;
        d.c *= static_cast<double>(t.params.e[j]);
        d.params.e[j] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(nvars_, npars_, std::move(out));
}

Polynomial Polynomial::substitute_params(const CVec& p) const {
    if (p.size() != npars_) throw std::invalid_argument("substitute_params: dimension mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        out.push_back(Term{t.c * mono_eval(t.params, p), t.vars, Monomial(0)});
    }
    return from_terms(nvars_, 0, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || npars_ != o.npars_)
        throw std::invalid_argument("polynomial shape mismatch");
    std::vector<Term> out = terms_;
    out.insert(out.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(nvars_, npars_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || npars_ != o.npars_)
        throw std::invalid_argument("polynomial shape mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const Term& s : terms_) {
        for (const Term& t : o.terms_) {
            Term r;
            r.c = s.c * t.c;
            r.vars = Monomial(nvars_);
            for (std::size_t j = 0; j < nvars_; ++j) r.vars.e[j] = s.vars.e[j] + t.vars.e[j];
            r.params = Monomial(npars_);
            for (std::size_t j = 0; j < npars_; ++j) r.params.e[j] = s.params.e[j] + t.params.e[j];
            out.push_back(std::move(r));
        }
    }
    return from_terms(nvars_, npars_, std::move(out));
}

Polynomial Polynomial::scaled(Complex s) const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.c *= s;
    return from_terms(nvars_, npars_, std::move(out));
}

Polynomial Polynomial::times_param(std::size_t j) const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.params.e[j] += 1;
    return from_terms(nvars_, npars_, std::move(out));
}

Polynomial Polynomial::truncated_in_var(std::size_t j, std::uint32_t max_exp) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.vars.e[j] <= max_exp) out.push_back(t);
    }
    return from_terms(nvars_, npars_, std::move(out));
}

Polynomial Polynomial::coefficient_of(std::size_t j, std::uint32_t power) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.vars.e[j] != power) continue;
        Term r = t;
        r.vars.e[j] = 0;
        out.push_back(std::move(r));
    }
    return from_terms(nvars_, npars_, std::move(out));
}

Polynomial Polynomial::drop_var(std::size_t j) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (t.vars.e[j] != 0) throw std::invalid_argument("drop_var: variable still present");
        Term r = t;
        r.vars.e.erase(r.vars.e.begin() + static_cast<std::ptrdiff_t>(j));
        out.push_back(std::move(r));
    }
    return from_terms(nvars_ - 1, npars_, std::move(out));
}

PolySystem::PolySystem(std::vector<Polynomial> polynomials, std::vector<std::string> variables,
                       std::vector<std::string> parameters)
    : polys_(std::move(polynomials)), variables_(std::move(variables)),
      parameters_(std::move(parameters)) {
    if (polys_.empty()) throw std::invalid_argument("system has no polynomials");
    if (polys_.size() != variables_.size())
        throw std::invalid_argument("system is not square: equation count != variable count");
    for (const Polynomial& f : polys_) {
        if (f.variable_count() != variables_.size() || f.parameter_count() != parameters_.size())
            throw std::invalid_argument("polynomial shape does not match the system");
    }
}

CVec evaluate(const PolySystem& F, const CVec& x) {
    if (F.is_parameterized())
        throw std::invalid_argument("parameterized system needs parameter values");
    CVec out(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) out[i] = F.polynomial(i).evaluate(x);
    return out;
}

CVec evaluate(const PolySystem& F, const CVec& x, const CVec& p) {
    CVec out(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) out[i] = F.polynomial(i).evaluate(x, p);
    return out;
}

CMatrix jacobian(const PolySystem& F, const CVec& x) {
    if (F.is_parameterized())
        throw std::invalid_argument("parameterized system needs parameter values");
    CMatrix J(F.size(), F.variable_count());
    for (std::size_t i = 0; i < F.size(); ++i) {
        for (std::size_t j = 0; j < F.variable_count(); ++j) {
            J.at(i, j) = F.polynomial(i).derivative_var(j).evaluate(x);
        }
    }
    return J;
}

CMatrix jacobian(const PolySystem& F, const CVec& x, const CVec& p) {
    CMatrix J(F.size(), F.variable_count());
    for (std::size_t i = 0; i < F.size(); ++i) {
        for (std::size_t j = 0; j < F.variable_count(); ++j) {
            J.at(i, j) = F.polynomial(i).derivative_var(j).evaluate(x, p);
        }
    }
    return J;
}

std::vector<unsigned> degrees(const PolySystem& F) {
    std::vector<unsigned> d(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) d[i] = F.polynomial(i).degree();
    return d;
}

PolySystem specialize(const PolySystem& F, const CVec& p) {
    if (!F.is_parameterized())
        throw std::invalid_argument("specialize: system has no parameters");
    if (p.size() != F.parameter_count())
        throw std::invalid_argument("specialize: parameter dimension mismatch");
    std::vector<Polynomial> polys;
    polys.reserve(F.size());
    for (const Polynomial& f : F.polynomials()) polys.push_back(f.substitute_params(p));
    return PolySystem(std::move(polys), F.variables());
}

PolySystem cyclic_system(unsigned n) {
    if (n < 2) throw std::invalid_argument("cyclic_system: n must be at least 2");
    std::vector<Polynomial> polys;
    for (unsigned k = 1; k < n; ++k) {
        // sum over i of the product of k consecutive variables starting at i
        std::vector<Term> terms;
        for (unsigned i = 0; i < n; ++i) {
            Monomial m(n);
            for (unsigned step = 0; step < k; ++step) m.e[(i + step) % n] += 1;
            terms.push_back(Term{1.0, std::move(m), Monomial(0)});
        }
        polys.push_back(Polynomial::from_terms(n, 0, std::move(terms)));
    }
    Monomial all(n);
    for (unsigned j = 0; j < n; ++j) all.e[j] = 1;
    polys.push_back(Polynomial::from_terms(
        n, 0, {Term{1.0, std::move(all), Monomial(0)}, Term{-1.0, Monomial(n), Monomial(0)}}));

    return PolySystem(std::move(polys), default_variable_names(n));
}

PolySystem scale_system(const PolySystem& F, Complex s) {
    std::vector<Polynomial> polys;
    polys.reserve(F.size());
    for (const Polynomial& f : F.polynomials()) polys.push_back(f.scaled(s));
    return PolySystem(std::move(polys), F.variables(), F.parameters());
}

double max_coefficient_distance(const PolySystem& A, const PolySystem& B) {
    const double inf = std::numeric_limits<double>::infinity();
    if (A.size() != B.size() || A.variable_count() != B.variable_count() ||
        A.parameter_count() != B.parameter_count())
        return inf;
    double worst = 0.0;
    for (std::size_t i = 0; i < A.size(); ++i) {
        std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>, std::pair<Complex, Complex>> merged;
        for (const Term& t : A.polynomial(i).terms()) merged[{t.vars.e, t.params.e}].first = t.c;
        for (const Term& t : B.polynomial(i).terms()) merged[{t.vars.e, t.params.e}].second = t.c;
        for (const auto& [mono, pair] : merged) {
            const double scale = 1.0 + std::max(std::abs(pair.first), std::abs(pair.second));
            worst = std::max(worst, std::abs(pair.first - pair.second) / scale);
        }
    }
    return worst;
}

std::vector<std::string> default_variable_names(std::size_t n, const std::string& stem) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = stem + std::to_string(i);
    return names;
}

namespace {

using nlohmann::json;

std::vector<std::uint32_t> read_exponents(const json& arr, std::size_t expected,
                                          const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + ": expected an array of exponents");
    if (arr.size() != expected)
        throw ParseError(where + ": expected " + std::to_string(expected) + " exponents, got " +
                         std::to_string(arr.size()));
    std::vector<std::uint32_t> out;
    out.reserve(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const json& v = arr[k];
        if (!v.is_number_integer() && !v.is_number_unsigned())
            throw ParseError(where + "[" + std::to_string(k) + "]: exponent is not an integer");
        const std::int64_t e = v.get<std::int64_t>();
        if (e < 0) throw ParseError(where + "[" + std::to_string(k) + "]: exponent is negative");
        if (e > 1000000) throw ParseError(where + "[" + std::to_string(k) + "]: exponent too large");
        out.push_back(static_cast<std::uint32_t>(e));
    }
    return out;
}

}  // namespace

PolySystem parse_system(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    if (!doc.contains("variables") || !doc["variables"].is_array())
        throw ParseError("missing \"variables\" array");
    if (!doc.contains("polynomials") || !doc["polynomials"].is_array())
        throw ParseError("missing \"polynomials\" array");

    std::vector<std::string> variables;
    for (const json& v : doc["variables"]) {
        if (!v.is_string()) throw ParseError("variables: expected strings");
        variables.push_back(v.get<std::string>());
    }
    std::vector<std::string> parameters;
    if (doc.contains("parameters")) {
        if (!doc["parameters"].is_array()) throw ParseError("\"parameters\" must be an array");
        for (const json& v : doc["parameters"]) {
            if (!v.is_string()) throw ParseError("parameters: expected strings");
            parameters.push_back(v.get<std::string>());
        }
    }

    const json& polys_json = doc["polynomials"];
    if (polys_json.empty()) throw ParseError("polynomials: empty list");
    if (polys_json.size() != variables.size())
        throw ParseError("system is not square: " + std::to_string(polys_json.size()) +
                         " polynomials over " + std::to_string(variables.size()) + " variables");

    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i < polys_json.size(); ++i) {
        const std::string where = "polynomials[" + std::to_string(i) + "]";
        const json& terms_json = polys_json[i];
        if (!terms_json.is_array()) throw ParseError(where + ": expected an array of terms");
        std::vector<Term> terms;
        for (std::size_t j = 0; j < terms_json.size(); ++j) {
            const std::string twhere = where + "[" + std::to_string(j) + "]";
            const json& t = terms_json[j];
            if (!t.is_object() || !t.contains("c") || !t.contains("e"))
                throw ParseError(twhere + ": term needs \"c\" and \"e\"");
            const json& c = t["c"];
            if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
                throw ParseError(twhere + ".c: expected [re, im]");
            Term term;
            term.c = Complex(c[0].get<double>(), c[1].get<double>());
            term.vars = Monomial(read_exponents(t["e"], variables.size(), twhere + ".e"));
            if (t.contains("pe")) {
                if (parameters.empty())
                    throw ParseError(twhere + ".pe: system declares no parameters");
                term.params = Monomial(read_exponents(t["pe"], parameters.size(), twhere + ".pe"));
            } else {
                term.params = Monomial(parameters.size());
            }
            terms.push_back(std::move(term));
        }
        polys.push_back(Polynomial::from_terms(variables.size(), parameters.size(), std::move(terms)));
    }
    return PolySystem(std::move(polys), std::move(variables), std::move(parameters));
}

std::string serialize_system(const PolySystem& F) {
    json doc;
    doc["variables"] = F.variables();
    doc["parameters"] = F.parameters();
    json polys = json::array();
    for (const Polynomial& f : F.polynomials()) {
        json terms = json::array();
        for (const Term& t : f.terms()) {
            json term;
            term["c"] = {t.c.real(), t.c.imag()};
            term["e"] = t.vars.e;
            if (F.parameter_count() > 0) term["pe"] = t.params.e;
            terms.push_back(std::move(term));
        }
        polys.push_back(std::move(terms));
    }
    doc["polynomials"] = std::move(polys);
    return doc.dump();
}

}  // namespace hc
