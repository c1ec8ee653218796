#include "orbifrob/milnor.hpp"

#include <algorithm>
#include <functional>

namespace orbifrob {

MultiPoly hessian(const MultiPoly& f) {
    size_t n = f.nvars();
    if (n == 0) return MultiPoly::constant({}, Cyclotomic::one());
    std::vector<std::vector<MultiPoly>> h(n, std::vector<MultiPoly>(n, MultiPoly(f.vars)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h[i][j] = f.derivative(i).derivative(j);
    // cofactor expansion determinant over the polynomial ring
    std::function<MultiPoly(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> MultiPoly {
        if (rows.size() == 1) return h[rows[0]][cols[0]];
        MultiPoly acc(f.vars);
        for (size_t k = 0; k < cols.size(); ++k) {
            if (h[rows[0]][cols[k]].is_zero()) continue;
            std::vector<int> r2(rows.begin() + 1, rows.end());
            std::vector<int> c2;
            for (size_t l = 0; l < cols.size(); ++l)
                if (l != k) c2.push_back(cols[l]);
            MultiPoly sub = det(r2, c2);
            MultiPoly term = h[rows[0]][cols[k]] * sub;
            if (k % 2 == 1) term = -term;
            acc = acc + term;
        }
        return acc;
    };
    std::vector<int> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = int(i);
    return det(idx, idx);
}

std::vector<Cyclotomic> QuotientRing::to_coords(const MultiPoly& p) const {
    MultiPoly nf = reduce(p);
    std::vector<Cyclotomic> v(basis.size(), Cyclotomic::zero());
    for (const auto& [e, c] : nf.terms) {
        auto it = index.find(e);
        if (it == index.end()) throw std::logic_error("normal form outside standard monomials");
        v[it->second] = c;
    }
    return v;
}

MultiPoly QuotientRing::from_coords(const std::vector<Cyclotomic>& v) const {
    MultiPoly p(vars);
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) p.add_term(basis[i], v[i]);
    return p;
}

MultiPoly QuotientRing::reduce(const MultiPoly& p) const {
    if (gb.empty()) return p;
    return normal_form(p, gb, ord);
}

std::vector<Cyclotomic> QuotientRing::mul_coords(const std::vector<Cyclotomic>& a,
                                                 const std::vector<Cyclotomic>& b) const {
    std::vector<Cyclotomic> out(basis.size(), Cyclotomic::zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            Cyclotomic c = a[i] * b[j];
            const auto& row = mult[i][j];
            for (size_t k = 0; k < row.size(); ++k)
                if (!row[k].is_zero()) out[k] += c * row[k];
        }
    }
    return out;
}

Cyclotomic QuotientRing::eta_coords(const std::vector<Cyclotomic>& a,
                                    const std::vector<Cyclotomic>& b) const {
    return eps_coords(mul_coords(a, b));
}

QuotientRing quotient_ring(const std::vector<MultiPoly>& ideal_gens,
                           const std::vector<std::string>& vars, const std::vector<Rat>& weights,
                           const MultiPoly* hess) {
    QuotientRing Q;
    Q.vars = vars;
    Q.weights = weights;
    Q.ord.weights = weights;

    if (vars.empty()) {
        Q.basis = {Exps{}};
        Q.index[Exps{}] = 0;
        Q.degrees = {Rat(0)};
        Q.socle = 0;
        Q.socle_degree = 0;
        Q.hessian_class = {Cyclotomic::one()};
        Q.mult = {{{Cyclotomic::one()}}};
        return Q;
    }

    std::vector<MultiPoly> gens;
    for (const auto& g : ideal_gens)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) throw NonIsolated("ideal is zero; quotient infinite dimensional");
    Q.gb = groebner_basis(gens, Q.ord);

    // finite iff every variable has a pure power among the leading terms
    std::vector<int> bound(vars.size(), -1);
    std::vector<Exps> lts;
    for (const auto& g : Q.gb) lts.push_back(leading_term(g, Q.ord).first);
    for (size_t v = 0; v < vars.size(); ++v) {
        for (const auto& lt : lts) {
            bool pure = lt[v] > 0;
            for (size_t u = 0; u < vars.size() && pure; ++u)
                if (u != v && lt[u] > 0) pure = false;
            if (pure) bound[v] = bound[v] < 0 ? lt[v] : std::min(bound[v], lt[v]);
        }
        if (bound[v] < 0)
            throw NonIsolated("quotient is infinite dimensional (variable " + vars[v] + " unbounded)");
    }

    // standard monomials: below the pure-power box and not divisible by any lead
    std::vector<Exps> std_mons;
    Exps cur(vars.size(), 0);
    std::function<void(size_t)> enumerate = [&](size_t v) {
        if (v == vars.size()) {
            for (const auto& lt : lts)
                if (exps_divides(lt, cur)) return;
            std_mons.push_back(cur);
            return;
        }
        for (int k = 0; k < bound[v]; ++k) {
            cur[v] = k;
            enumerate(v + 1);
        }
        cur[v] = 0;
    };
    enumerate(0);

    std::sort(std_mons.begin(), std_mons.end(), [&](const Exps& a, const Exps& b) {
        Rat da = Q.ord.wdeg(a), db = Q.ord.wdeg(b);
        if (da != db) return da < db;
        return a < b;
    });
    Q.basis = std_mons;
    for (size_t i = 0; i < Q.basis.size(); ++i) Q.index[Q.basis[i]] = int(i);
    for (const auto& e : Q.basis) Q.degrees.push_back(Q.ord.wdeg(e));

    // socle: top graded component must be one-dimensional
    Q.socle_degree = Q.degrees.back();
    int top_count = 0;
    for (size_t i = 0; i < Q.degrees.size(); ++i)
        if (Q.degrees[i] == Q.socle_degree) {
            Q.socle = int(i);
            ++top_count;
        }
    if (top_count != 1)
        throw NonIsolated("top graded component is not one-dimensional");

    // multiplication table
    size_t n = Q.basis.size();
    Q.mult.assign(n, std::vector<std::vector<Cyclotomic>>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            MultiPoly prod = MultiPoly::monomial(vars, exps_mul(Q.basis[i], Q.basis[j]), Cyclotomic::one());
            auto v = Q.to_coords(prod);
            Q.mult[i][j] = v;
            Q.mult[j][i] = v;
        }
    }

    if (hess) {
        Q.hessian_class = Q.to_coords(*hess);
        for (size_t i = 0; i < n; ++i)
            if (int(i) != Q.socle && !Q.hessian_class[i].is_zero())
                throw std::logic_error("Hessian class not proportional to the socle monomial");
        if (Q.hessian_class[Q.socle].is_zero())
            throw NonIsolated("Hessian class vanishes in the quotient");
    } else {
        Q.hessian_class.assign(n, Cyclotomic::zero());
        Q.hessian_class[Q.socle] = Cyclotomic::one();
    }
    return Q;
}

QuotientRing milnor_ring(const MultiPoly& f, const std::vector<Rat>& weights) {
    if (f.nvars() != weights.size())
        throw NotQuasiHomogeneous("weight count does not match variable count");
    for (const auto& q : weights)
        if (!(q > 0) || q > Rat(1, 2))
            throw NotQuasiHomogeneous("weights must lie in (0, 1/2]");
    if (f.nvars() == 0) return quotient_ring({}, {}, {});
    if (!f.is_quasi_homogeneous(weights, Rat(1)))
        throw NotQuasiHomogeneous("polynomial is not quasi-homogeneous of degree 1");

    std::vector<MultiPoly> jac;
    for (size_t i = 0; i < f.nvars(); ++i) jac.push_back(f.derivative(i));
    MultiPoly hess = hessian(f);
    QuotientRing Q = quotient_ring(jac, f.vars, weights, &hess);

    // expected Milnor number for a quasi-homogeneous isolated singularity
    Rat mu(1);
    for (const auto& q : weights) mu *= (Rat(1) / q - 1);
    if (Rat(Q.dim()) != mu)
        throw NonIsolated("Milnor dimension does not match prod(1/q_i - 1)");
    return Q;
}

}  // namespace orbifrob
