#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbifrob/frobenius.hpp"

using namespace orbifrob;

namespace {

FrobAlgebra milnor_An(int n) {
    std::vector<std::string> v = {"z"};
    Exps e(1, n + 1);
    MultiPoly f = MultiPoly::monomial(v, e, Cyclotomic::one());
    return FrobAlgebra::from_quotient_ring(milnor_ring(f, {rat(1, n + 1)}));
}

}  // namespace

TEST_CASE("A_3 Milnor ring passes all Frobenius axioms") {
    FrobAlgebra A = milnor_An(3);
    auto R = check_frobenius(A);
    CHECK(R.all_pass());
    INFO(R.summary());
}

TEST_CASE("ground field passes") {
    CHECK(check_frobenius(FrobAlgebra::ground_field()).all_pass());
}

TEST_CASE("corrupting eta is caught with a witness") {
    FrobAlgebra A = milnor_An(3);
    A.eta[0][0] = Cyclotomic::one();  // eta(1,1)=1 violates degree homogeneity
    auto R = check_frobenius(A);
    CHECK(!R.all_pass());
    const CheckItem* f = R.first_failure();
    REQUIRE(f != nullptr);
    CHECK(!f->witness.empty());
}

TEST_CASE("counit and rho for A_n") {
    for (int n : {2, 3, 5}) {
        FrobAlgebra A = milnor_An(n);
        auto cr = counit_rho(A);
        // rho = z^{n-1}
        for (int i = 0; i < A.dim(); ++i) {
            if (i == n - 1)
                CHECK(cr.rho[i].is_one());
            else
                CHECK(cr.rho[i].is_zero());
        }
        CHECK(cr.mu_round_trip_ok);
    }
    auto cr = counit_rho(FrobAlgebra::ground_field());
    CHECK(cr.rho == CVec{Cyclotomic::one()});
}

TEST_CASE("characteristic series") {
    FrobAlgebra A = milnor_An(3);
    auto s = char_series(A);
    REQUIRE(s.size() == 3);
    CHECK(s[rat(0)] == 1);
    CHECK(s[rat(1, 4)] == 1);
    CHECK(s[rat(1, 2)] == 1);
    // scaling multiplies exponents... shifts by lambda
    auto sc = char_series_scaled(A, rat(1, 4));
    CHECK(sc[rat(1, 4)] == 1);
    CHECK(sc[rat(3, 4)] == 1);
}

TEST_CASE("direct sum: same algebra keeps the grading") {
    FrobAlgebra A = milnor_An(3);
    auto S = direct_sum(A, A);
    CHECK(S.graded);
    CHECK(S.sum.dim() == 2 * A.dim());
    CHECK(*S.sum.d == *A.d);
    CHECK(*S.sum.D == *A.D);
    CHECK(check_frobenius(S.sum).all_pass());
    // series adds when graded
    auto s = char_series(S.sum);
    for (const auto& [d, m] : char_series(A)) CHECK(s[d] == 2 * m);
}

TEST_CASE("direct sum: incompatible (d,D) degrades to ungraded with warning") {
    FrobAlgebra A = milnor_An(3);  // d=0, D=1/2
    FrobAlgebra B = milnor_An(3);
    // shift B's grading so that d''/D'' differs and no scaling exists
    std::vector<Rat> dg = *B.deg;
    for (auto& x : dg) x += rat(1, 4);
    B.deg = dg;
    B.d = rat(1, 4);
    B.D = rat(3, 4);
    auto S = direct_sum(A, B);
    CHECK(!S.graded);
    CHECK(!S.warning.empty());
    CHECK(check_frobenius(S.sum).all_pass());
}

TEST_CASE("tensor product") {
    FrobAlgebra k = FrobAlgebra::ground_field();
    FrobAlgebra A = milnor_An(3);
    FrobAlgebra T = tensor(k, A);
    CHECK(T.dim() == A.dim());
    CHECK(check_frobenius(T).all_pass());

    FrobAlgebra AA = tensor(A, A);
    CHECK(AA.dim() == 9);
    CHECK(*AA.d == rat(0));
    CHECK(*AA.D == rat(1));
    CHECK(check_frobenius(AA).all_pass());
    // char series of the tensor = product of series
    auto sa = char_series(A);
    auto st = char_series(AA);
    std::map<Rat, int> prod;
    for (const auto& [d1, m1] : sa)
        for (const auto& [d2, m2] : sa) prod[d1 + d2] += m1 * m2;
    CHECK(st == prod);
}

namespace {

// exterior algebra on two odd generators: {1, t1, t2, t1 t2}
FrobAlgebra exterior2() {
    FrobAlgebra S;
    S.labels = {"1", "t1", "t2", "t1t2"};
    S.mult.assign(4, std::vector<CVec>(4, CVec(4, Cyclotomic::zero())));
    auto one = Cyclotomic::one();
    S.mult[0][0][0] = one;
    S.mult[0][1][1] = one;
    S.mult[1][0][1] = one;
    S.mult[0][2][2] = one;
    S.mult[2][0][2] = one;
    S.mult[0][3][3] = one;
    S.mult[3][0][3] = one;
    S.mult[1][2][3] = one;
    S.mult[2][1][3] = -one;
    S.eta = cmat_zero(4, 4);
    S.eta[0][3] = one;
    S.eta[3][0] = one;
    S.eta[1][2] = one;
    S.eta[2][1] = -one;
    S.unit = {one, Cyclotomic::zero(), Cyclotomic::zero(), Cyclotomic::zero()};
    S.parity = std::vector<int>{0, 1, 1, 0};
    return S;
}

}  // namespace

TEST_CASE("super tensor: odd x odd sign forced by the Koszul rule") {
    FrobAlgebra S = exterior2();
    CHECK(check_frobenius(S).all_pass());
    FrobAlgebra T = tensor(S, S);
    CHECK(check_frobenius(T).all_pass());
    // (t1 x 1)*(1 x t1) = -(1 x t1)*(t1 x 1)
    CVec a = T.basis_vec(1 * 4 + 0);
    CVec b = T.basis_vec(0 * 4 + 1);
    CVec ab = T.mul(a, b);
    CVec ba = T.mul(b, a);
    bool nonzero = false;
    for (int k = 0; k < T.dim(); ++k) {
        CHECK(ab[k] == -ba[k]);
        if (!ab[k].is_zero()) nonzero = true;
    }
    CHECK(nonzero);
}

TEST_CASE("Euler field checks") {
    FrobAlgebra A = milnor_An(4);  // d = 0, D = 3/5
    auto R = check_euler(A, *A.deg, rat(0), rat(3, 5));
    CHECK(R.all_pass());
    // ground field with E = 0
    FrobAlgebra k = FrobAlgebra::ground_field();
    CHECK(check_euler(k, {rat(0)}, rat(0), rat(0)).all_pass());
    // perturbed E fails with witness
    std::vector<Rat> bad = *A.deg;
    bad[1] += 1;
    auto Rb = check_euler(A, bad, rat(0), rat(3, 5));
    CHECK(!Rb.all_pass());
    CHECK(Rb.first_failure() != nullptr);
}
