#include "orbifrob/poly.hpp"

#include <sstream>

namespace orbifrob {

MultiPoly MultiPoly::constant(std::vector<std::string> vs, const Cyclotomic& c) {
    MultiPoly p(std::move(vs));
    p.add_term(Exps(p.vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vs, const Exps& e, const Cyclotomic& c) {
    MultiPoly p(std::move(vs));
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vs, size_t idx) {
    MultiPoly p(std::move(vs));
    Exps e(p.vars.size(), 0);
    e[idx] = 1;
    p.add_term(e, Cyclotomic::one());
    return p;
}

void MultiPoly::add_term(const Exps& e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(vars);
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) r.add_term(exps_mul(e1, e2), c1 * c2);
    return r;
}

MultiPoly MultiPoly::operator*(const Cyclotomic& c) const {
    MultiPoly r(vars);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms) r.add_term(e, k * c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::derivative(size_t var) const {
    MultiPoly r(vars);
    for (const auto& [e, c] : terms) {
        if (e[var] == 0) continue;
        Exps e2 = e;
        e2[var] -= 1;
        r.add_term(e2, c * Cyclotomic::from_rat(Rat(e[var])));
    }
    return r;
}

MultiPoly MultiPoly::substitute_linear(const std::vector<std::vector<Cyclotomic>>& m,
                                       std::vector<std::string> new_vars) const {
    // images of the old variables as polynomials in the new ones
    std::vector<MultiPoly> img;
    for (size_t i = 0; i < nvars(); ++i) {
        MultiPoly xi(new_vars);
        for (size_t j = 0; j < new_vars.size(); ++j) {
            Exps e(new_vars.size(), 0);
            e[j] = 1;
            xi.add_term(e, m[i][j]);
        }
        img.push_back(xi);
    }
    MultiPoly out(new_vars);
    for (const auto& [e, c] : terms) {
        MultiPoly t = MultiPoly::constant(new_vars, c);
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t = t * img[i];
        out = out + t;
    }
    return out;
}

bool MultiPoly::is_quasi_homogeneous(const std::vector<Rat>& weights, const Rat& deg) const {
    for (const auto& [e, c] : terms) {
        Rat d(0);
        for (size_t i = 0; i < e.size(); ++i) d += weights[i] * e[i];
        if (d != deg) return false;
    }
    return true;
}

std::string MultiPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace orbifrob
