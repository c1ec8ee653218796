#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbifrob/group.hpp"

using namespace orbifrob;

namespace {

CMat diag(std::vector<Cyclotomic> d) {
    CMat m = cmat_zero(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

}  // namespace

TEST_CASE("cyclic group from diag(zeta_{n+1})") {
    for (int n : {2, 3, 5}) {
        MatrixGroup G = generate_group({diag({Cyclotomic::root(n + 1, 1)})});
        CHECK(G.size() == n + 1);
        CHECK(G.is_cyclic());
        CHECK(G.exponent == n + 1);
        // associativity of the multiplication table on all triples
        for (int a = 0; a < G.size(); ++a)
            for (int b = 0; b < G.size(); ++b)
                for (int c = 0; c < G.size(); ++c)
                    CHECK(G.mul[G.mul[a][b]][c] == G.mul[a][G.mul[b][c]]);
    }
}

TEST_CASE("Z/2 from -1 on one variable, and the trivial group") {
    MatrixGroup G = generate_group({diag({Cyclotomic::from_rat(rat(-1))})});
    CHECK(G.size() == 2);
    CHECK(G.inv[1] == 1);
    MatrixGroup T = generate_group({cmat_identity(1)});
    CHECK(T.size() == 1);
}

TEST_CASE("element data: diagonal generator") {
    int n = 4;
    MatrixGroup G = generate_group({diag({Cyclotomic::root(n + 1, 1)})});
    auto d = element_data(G, 1, 2 * (n + 1));
    CHECK(d.moved == std::vector<int>{0});
    CHECK(d.fixed.empty());
    CHECK(d.eigen_args == std::vector<Rat>{rat(1, n + 1)});
    CHECK(d.det == Cyclotomic::root(n + 1, 1));
    auto de = element_data(G, 0, 2 * (n + 1));
    CHECK(de.fixed == std::vector<int>{0});
    CHECK(de.det.is_one());
}

TEST_CASE("element data: inverse pairs complement each other") {
    MatrixGroup G = generate_group({diag({Cyclotomic::root(5, 1), Cyclotomic::root(5, 3)})});
    for (int g = 0; g < G.size(); ++g) {
        auto dg = element_data(G, g, 10);
        auto di = element_data(G, G.inv[g], 10);
        REQUIRE(dg.eigen_args.size() == di.eigen_args.size());
        // eigen args of g and g^{-1} sum to 0 or 1 componentwise (after sorting,
        // matching moved coordinates pairwise by complements)
        std::vector<Rat> a = dg.eigen_args, b = di.eigen_args;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end(), std::greater<Rat>());
        for (size_t i = 0; i < a.size(); ++i) {
            Rat s = a[i] + b[i];
            CHECK((s == 0 || s == 1));
        }
    }
}

TEST_CASE("element data: non-diagonal rotation matrix") {
    // 90-degree rotation in O(2): eigenvalues +-i
    CMat rot = cmat_zero(2, 2);
    rot[0][1] = Cyclotomic::from_rat(rat(-1));
    rot[1][0] = Cyclotomic::one();
    MatrixGroup G = generate_group({rot});
    CHECK(G.size() == 4);
    auto d = element_data(G, 1, 4);
    CHECK(d.fixed.empty());
    std::vector<Rat> args = d.eigen_args;
    std::sort(args.begin(), args.end());
    CHECK(args == std::vector<Rat>({rat(1, 4), rat(3, 4)}));
    CHECK(d.det.is_one());
    // diag basis actually diagonalizes
    CMat B = d.diag_basis;
    CMat D = cmat_mul(cmat_inverse(B), cmat_mul(G.elems[1], B));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (i != j) CHECK(D[i][j].is_zero());
}

TEST_CASE("enumerate parities") {
    MatrixGroup Z2 = generate_group({diag({Cyclotomic::from_rat(rat(-1))})});
    auto p2 = enumerate_parities(Z2);
    CHECK(p2.size() == 2);
    MatrixGroup Z3 = generate_group({diag({Cyclotomic::root(3, 1)})});
    CHECK(enumerate_parities(Z3).size() == 1);
    MatrixGroup Z4 = generate_group({diag({Cyclotomic::root(4, 1)})});
    CHECK(enumerate_parities(Z4).size() == 2);
    // trivial parity always present
    for (const auto& p : enumerate_parities(Z4)) {
        CHECK(p.value[0] == 0);
    }
}

TEST_CASE("discrete torsion enumeration") {
    // cyclic groups admit only the trivial torsion
    MatrixGroup Z4 = generate_group({diag({Cyclotomic::root(4, 1)})});
    auto t4 = enumerate_discrete_torsion(Z4);
    REQUIRE(t4.size() == 1);
    CHECK(check_discrete_torsion(Z4, t4[0]));

    MatrixGroup T = generate_group({cmat_identity(1)});
    CHECK(enumerate_discrete_torsion(T).size() == 1);

    // Z/2 x Z/2: two torsions, +-1 on the generating commuting pair
    MatrixGroup V4 = generate_group({diag({Cyclotomic::from_rat(rat(-1)), Cyclotomic::one()}),
                                     diag({Cyclotomic::one(), Cyclotomic::from_rat(rat(-1))})});
    CHECK(V4.size() == 4);
    auto tv = enumerate_discrete_torsion(V4);
    CHECK(tv.size() == 2);
    for (const auto& t : tv) CHECK(check_discrete_torsion(V4, t));
    bool found_nontrivial = false;
    for (const auto& t : tv)
        if (t(V4.gens[0], V4.gens[1]) == Cyclotomic::from_rat(rat(-1))) found_nontrivial = true;
    CHECK(found_nontrivial);
}

TEST_CASE("det on moved space") {
    int n = 3;
    MatrixGroup G = generate_group({diag({Cyclotomic::root(n + 1, 1)})});
    // one variable: N_h = {0} for h != e, so det(g|N_h) = det(g)
    CHECK(det_on_moved(G, 2, 1, 2 * (n + 1)) == Cyclotomic::root(4, 2));
    // h = e: T_h is everything, det(g|N_e) = det(g)/det(g) = 1
    CHECK(det_on_moved(G, 2, 0, 2 * (n + 1)).is_one());
}
