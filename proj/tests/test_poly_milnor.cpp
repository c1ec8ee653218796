#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "orbifrob/linalg.hpp"
#include "orbifrob/milnor.hpp"

using namespace orbifrob;

namespace {

MultiPoly zpow(const std::vector<std::string>& vars, size_t var, int k,
               Cyclotomic c = Cyclotomic::one()) {
    Exps e(vars.size(), 0);
    e[var] = k;
    return MultiPoly::monomial(vars, e, c);
}

MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_deg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, max_deg);
    MultiPoly p(vars);
    for (int t = 0; t < 5; ++t) {
        Exps e(vars.size());
        for (auto& x : e) x = deg(rng);
        p.add_term(e, Cyclotomic::from_rat(rat(coeff(rng))));
    }
    return p;
}

}  // namespace

TEST_CASE("groebner normal form basics") {
    std::vector<std::string> v = {"z"};
    MonomialOrder ord;
    ord.weights = {rat(1)};
    // z^3 mod (z^3) -> 0
    CHECK(groebner_normal_form(zpow(v, 0, 3), {zpow(v, 0, 3)}, ord).is_zero());
    // z^4 + z mod (z^3) -> z
    MultiPoly p = zpow(v, 0, 4) + zpow(v, 0, 1);
    CHECK(groebner_normal_form(p, {zpow(v, 0, 3)}, ord) == zpow(v, 0, 1));
}

TEST_CASE("groebner normal form: jacobian of x^3+y^3 kills x^2 y") {
    std::vector<std::string> v = {"x", "y"};
    MonomialOrder ord;
    ord.weights = {rat(1, 3), rat(1, 3)};
    MultiPoly fx = zpow(v, 0, 2, Cyclotomic::from_rat(rat(3)));
    MultiPoly fy = zpow(v, 1, 2, Cyclotomic::from_rat(rat(3)));
    Exps e = {2, 1};
    MultiPoly x2y = MultiPoly::monomial(v, e, Cyclotomic::one());
    CHECK(groebner_normal_form(x2y, {fx, fy}, ord).is_zero());
}

TEST_CASE("normal form is a projection and multiplicative up to reduction") {
    std::mt19937 rng(42);
    std::vector<std::string> vars = {"x", "y"};
    MonomialOrder ord;
    ord.weights = {rat(1), rat(1)};
    std::vector<MultiPoly> gens = {zpow(vars, 0, 3) + zpow(vars, 1, 2), zpow(vars, 1, 3)};
    auto G = groebner_basis(gens, ord);
    for (int t = 0; t < 12; ++t) {
        MultiPoly p = random_poly(rng, vars, 4);
        MultiPoly q = random_poly(rng, vars, 4);
        MultiPoly np = normal_form(p, G, ord);
        CHECK(normal_form(np, G, ord) == np);
        // NF(p*q) == NF(NF(p)*NF(q))
        CHECK(normal_form(p * q, G, ord) == normal_form(np * normal_form(q, G, ord), G, ord));
    }
}

TEST_CASE("hessian") {
    std::vector<std::string> v = {"z"};
    CHECK(hessian(zpow(v, 0, 2)) == MultiPoly::constant(v, Cyclotomic::from_rat(rat(2))));
    // z^{n+1} -> n(n+1) z^{n-1}
    for (int n : {2, 3, 5}) {
        MultiPoly h = hessian(zpow(v, 0, n + 1));
        CHECK(h == zpow(v, 0, n - 1, Cyclotomic::from_rat(rat(long(n) * (n + 1)))));
    }
    std::vector<std::string> xy = {"x", "y"};
    MultiPoly f = zpow(xy, 0, 2) + zpow(xy, 1, 2);
    CHECK(hessian(f) == MultiPoly::constant(xy, Cyclotomic::from_rat(rat(4))));
}

TEST_CASE("milnor ring of z^{n+1}") {
    std::vector<std::string> v = {"z"};
    for (int n : {2, 3, 4, 9}) {
        QuotientRing Q = milnor_ring(zpow(v, 0, n + 1), {rat(1, n + 1)});
        CHECK(Q.dim() == n);
        for (int i = 0; i < n; ++i) {
            CHECK(Q.basis[i] == Exps{i});
            CHECK(Q.degrees[i] == rat(i, n + 1));
        }
        CHECK(Q.socle == n - 1);
        // eta(z^i, z^j) = delta_{i, n-1-j} with eps(rho) = 1
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CVec a(n, Cyclotomic::zero()), b(n, Cyclotomic::zero());
                a[i] = Cyclotomic::one();
                b[j] = Cyclotomic::one();
                Cyclotomic eta = Q.eta_coords(a, b);
                if (i + j == n - 1)
                    CHECK(eta.is_one());
                else
                    CHECK(eta.is_zero());
            }
        // Hessian class is n(n+1) * rho
        CHECK(Q.hessian_class[Q.socle] == Cyclotomic::from_rat(rat(long(n) * (n + 1))));
    }
}

TEST_CASE("milnor ring of x^3 + y^3") {
    std::vector<std::string> v = {"x", "y"};
    MultiPoly f = zpow(v, 0, 3) + zpow(v, 1, 3);
    QuotientRing Q = milnor_ring(f, {rat(1, 3), rat(1, 3)});
    CHECK(Q.dim() == 4);
    CHECK(Q.basis == std::vector<Exps>({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    // rho proportional to xy, eps(xy) = 1
    CHECK(Q.socle == 3);
    CHECK(Q.hessian_class[3] == Cyclotomic::from_rat(rat(36)));
}

TEST_CASE("milnor dimension formula and pairing nondegeneracy") {
    std::vector<std::string> v = {"x", "y"};
    // D_n normal form x^{n-1} + x y^2, weights (1/(n-1), (n-2)/(2(n-1)))
    for (int n : {3, 4, 5, 6}) {
        MultiPoly f = zpow(v, 0, n - 1) + MultiPoly::monomial(v, Exps{1, 2}, Cyclotomic::one());
        std::vector<Rat> w = {rat(1, n - 1), rat(n - 2, 2 * (n - 1))};
        QuotientRing Q = milnor_ring(f, w);
        Rat mu = (Rat(1) / w[0] - 1) * (Rat(1) / w[1] - 1);
        CHECK(Rat(Q.dim()) == mu);
        CHECK(Q.dim() == n);
        // Gram matrix of eta has full rank
        CMat gram = cmat_zero(Q.dim(), Q.dim());
        for (int i = 0; i < Q.dim(); ++i)
            for (int j = 0; j < Q.dim(); ++j) {
                CVec a(Q.dim(), Cyclotomic::zero()), b(Q.dim(), Cyclotomic::zero());
                a[i] = Cyclotomic::one();
                b[j] = Cyclotomic::one();
                gram[i][j] = Q.eta_coords(a, b);
            }
        CHECK(cmat_rank(gram) == size_t(Q.dim()));
        // eps kills degrees below deg(rho)
        for (int i = 0; i < Q.dim(); ++i)
            if (Q.degrees[i] < Q.socle_degree) {
                CVec a(Q.dim(), Cyclotomic::zero());
                a[i] = Cyclotomic::one();
                CHECK(Q.eps_coords(a).is_zero());
            }
    }
}

TEST_CASE("milnor error paths") {
    std::vector<std::string> v = {"x", "y"};
    // not quasi-homogeneous of degree 1
    MultiPoly bad = zpow(v, 0, 3) + zpow(v, 1, 2);
    CHECK_THROWS_AS(milnor_ring(bad, {rat(1, 3), rat(1, 3)}), NotQuasiHomogeneous);
    // weight out of (0, 1/2]
    CHECK_THROWS_AS(milnor_ring(zpow(v, 0, 1) + zpow(v, 1, 2), {rat(1), rat(1, 2)}),
                    NotQuasiHomogeneous);
    // non-isolated: f = x^2 y^2 is quasi-homogeneous but singular along the axes
    MultiPoly ni = MultiPoly::monomial(v, Exps{2, 2}, Cyclotomic::one());
    CHECK_THROWS_AS(milnor_ring(ni, {rat(1, 4), rat(1, 4)}), NonIsolated);
}

TEST_CASE("zero-variable milnor ring is the ground field") {
    QuotientRing Q = milnor_ring(MultiPoly(std::vector<std::string>{}), {});
    CHECK(Q.dim() == 1);
    CHECK(Q.socle == 0);
    CHECK(Q.socle_degree == 0);
}
