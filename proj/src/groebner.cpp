#include "orbifrob/groebner.hpp"

#include <algorithm>
#include <deque>

namespace orbifrob {

const std::pair<const Exps, Cyclotomic>& leading_term(const MultiPoly& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw std::invalid_argument("leading_term of zero polynomial");
    auto best = p.terms.begin();
    for (auto it = std::next(p.terms.begin()); it != p.terms.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return *best;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& gens, const MonomialOrder& ord) {
    MultiPoly r(p.vars);
    MultiPoly h = p;
    std::vector<std::pair<Exps, Cyclotomic>> lts;
    lts.reserve(gens.size());
    for (const auto& g : gens) lts.push_back(leading_term(g, ord));

    while (!h.is_zero()) {
        auto lt = leading_term(h, ord);
        bool reduced = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (!exps_divides(lts[i].first, lt.first)) continue;
            Exps q = exps_div(lt.first, lts[i].first);
            Cyclotomic coef = lt.second / lts[i].second;
            h = h - gens[i] * MultiPoly::monomial(h.vars, q, coef);
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(lt.first, lt.second);
            MultiPoly t = MultiPoly::monomial(h.vars, lt.first, lt.second);
            h = h - t;
        }
    }
    return r;
}

namespace {

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
    auto lf = leading_term(f, ord);
    auto lg = leading_term(g, ord);
    Exps l = exps_lcm(lf.first, lg.first);
    MultiPoly a = f * MultiPoly::monomial(f.vars, exps_div(l, lf.first), Cyclotomic::one() / lf.second);
    MultiPoly b = g * MultiPoly::monomial(g.vars, exps_div(l, lg.first), Cyclotomic::one() / lg.second);
    return a - b;
}

bool coprime(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace

std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, const MonomialOrder& ord) {
    std::vector<MultiPoly> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(g);
    if (G.empty()) return G;

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Exps li = leading_term(G[i], ord).first;
        const Exps lj = leading_term(G[j], ord).first;
        if (coprime(li, lj)) continue;  // Buchberger's first criterion
        MultiPoly s = normal_form(s_poly(G[i], G[j], ord), G, ord);
        if (s.is_zero()) continue;
        G.push_back(s);
        for (size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
    }

    // minimalize: drop generators whose lead is divisible by another lead
    std::vector<MultiPoly> Gmin;
    for (size_t i = 0; i < G.size(); ++i) {
        const Exps li = leading_term(G[i], ord).first;
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const Exps lj = leading_term(G[j], ord).first;
            if (exps_divides(lj, li) && (lj != li || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) Gmin.push_back(G[i]);
    }

    // interreduce and normalize monic
    std::vector<MultiPoly> Gred;
    for (size_t i = 0; i < Gmin.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < Gmin.size(); ++j)
            if (j != i) others.push_back(Gmin[j]);
        MultiPoly r = others.empty() ? Gmin[i] : normal_form(Gmin[i], others, ord);
        if (r.is_zero()) continue;
        auto lt = leading_term(r, ord);
        Gred.push_back(r * (Cyclotomic::one() / lt.second));
    }
    // deterministic ordering by leading monomial
    std::sort(Gred.begin(), Gred.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.less(leading_term(a, ord).first, leading_term(b, ord).first);
    });
    return Gred;
}

MultiPoly groebner_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& ideal_gens,
                               const MonomialOrder& ord) {
    auto G = groebner_basis(ideal_gens, ord);
    if (G.empty()) return p;
    return normal_form(p, G, ord);
}

}  // namespace orbifrob
