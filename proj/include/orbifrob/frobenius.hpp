#pragma once

#include <optional>

#include "orbifrob/linalg.hpp"
#include "orbifrob/milnor.hpp"
#include "orbifrob/report.hpp"

namespace orbifrob {

struct DegenerateEta : std::runtime_error {
    explicit DegenerateEta(const std::string& m) : std::runtime_error(m) {}
};

/// Finite-dimensional (bi)graded, possibly super, Frobenius algebra given by a
/// basis, structure constants and the bilinear form.
struct FrobAlgebra {
    std::vector<std::string> labels;
    std::vector<std::vector<CVec>> mult;  // mult[i][j] = coordinates of b_i * b_j
    CMat eta;
    CVec unit;
    std::optional<std::vector<Rat>> deg;     // E-grading
    std::optional<std::vector<Rat>> degbar;  // second grading of a bigrading
    std::optional<std::vector<int>> parity;  // Z/2 grading (super case)
    std::optional<Rat> d;  // degree of the unit
    std::optional<Rat> D;  // degree of the counit / rho

    int dim() const { return int(labels.size()); }
    bool is_super() const;

    CVec mul(const CVec& a, const CVec& b) const;
    Cyclotomic eta_form(const CVec& a, const CVec& b) const;
    CVec basis_vec(int i) const;

    /// the ground field k as a Frobenius algebra
    static FrobAlgebra ground_field();
    /// package a Milnor ring (grading attached; d = 0, D = socle degree)
    static FrobAlgebra from_quotient_ring(const QuotientRing& Q);
};

/// Axiom report: associativity, (super-)commutativity, unit, invariance,
/// non-degeneracy, grading homogeneity of eta and of the multiplication,
/// super coherence. Exhaustive over basis tuples.
CheckReport check_frobenius(const FrobAlgebra& A);

/// counit eps(a) = eta(a, 1) and the socle element rho normalized by eps(rho)=1,
/// plus the mu-dictionary round trip (rebuild mult from mu and eta^{-1}).
struct CounitRho {
    CVec eps;  // functional as a row vector: eps(a) = sum eps_i a_i
    CVec rho;
    bool mu_round_trip_ok = true;
};
CounitRho counit_rho(const FrobAlgebra& A);

/// characteristic series: degree -> multiplicity
std::map<Rat, int> char_series(const FrobAlgebra& A);
/// scaled series chi_{lambda A}(t) = t^lambda chi_A(t): shifts all exponents
std::map<Rat, int> char_series_scaled(const FrobAlgebra& A, const Rat& lambda);

struct DirectSumResult {
    FrobAlgebra sum;
    bool graded = false;
    std::string warning;  // set when the gradings cannot be scaled compatibly
};
DirectSumResult direct_sum(const FrobAlgebra& A, const FrobAlgebra& B);

FrobAlgebra tensor(const FrobAlgebra& A, const FrobAlgebra& B);

/// Euler field check: E diagonal with given eigenvalues; verifies the conformal
/// and derivation identities and that the eigenvalues reproduce the grading.
CheckReport check_euler(const FrobAlgebra& A, const std::vector<Rat>& E_eigs, const Rat& d,
                        const Rat& D);

}  // namespace orbifrob
