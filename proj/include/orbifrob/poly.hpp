#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbifrob/cyclotomic.hpp"

namespace orbifrob {

struct NotQuasiHomogeneous : std::runtime_error {
    explicit NotQuasiHomogeneous(const std::string& m) : std::runtime_error(m) {}
};

// exponent vector; one entry per declared variable
using Exps = std::vector<int>;

inline Exps exps_mul(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline bool exps_divides(const Exps& a, const Exps& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline Exps exps_div(const Exps& b, const Exps& a) {  // b / a
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}
inline Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

/// Monomial order: weighted degree first (weights q_i), ties broken by lex on
/// the declared variable list (earlier variable = higher).
struct MonomialOrder {
    std::vector<Rat> weights;  // one per variable; empty means total degree

    Rat wdeg(const Exps& e) const {
        Rat d(0);
        for (size_t i = 0; i < e.size(); ++i) d += (weights.empty() ? Rat(1) : weights[i]) * e[i];
        return d;
    }
    // true if a < b in the order
    bool less(const Exps& a, const Exps& b) const {
        Rat da = wdeg(a), db = wdeg(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

/// Exact multivariate polynomial over the ambient cyclotomic field.
class MultiPoly {
  public:
    std::vector<std::string> vars;
    std::map<Exps, Cyclotomic> terms;  // invariant: no zero coefficients stored

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vs) : vars(std::move(vs)) {}

    static MultiPoly constant(std::vector<std::string> vs, const Cyclotomic& c);
    static MultiPoly monomial(std::vector<std::string> vs, const Exps& e, const Cyclotomic& c);
    static MultiPoly variable(std::vector<std::string> vs, size_t idx);

    bool is_zero() const { return terms.empty(); }
    size_t nvars() const { return vars.size(); }

    void add_term(const Exps& e, const Cyclotomic& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Cyclotomic& c) const;
    MultiPoly operator-() const;

    bool operator==(const MultiPoly& o) const { return vars == o.vars && terms == o.terms; }

    MultiPoly derivative(size_t var) const;

    /// substitute x_i -> sum_j m[i][j] * y_j (linear change into new variables)
    MultiPoly substitute_linear(const std::vector<std::vector<Cyclotomic>>& m,
                                std::vector<std::string> new_vars) const;

    /// check that every monomial has weighted degree `deg`
    bool is_quasi_homogeneous(const std::vector<Rat>& weights, const Rat& deg) const;

    std::string str() const;
};

}  // namespace orbifrob
