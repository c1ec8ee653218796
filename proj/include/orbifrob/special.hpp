#pragma once

#include "orbifrob/gfrob.hpp"

namespace orbifrob {

struct DegenerateSectorMetric : std::runtime_error {
    explicit DegenerateSectorMetric(const std::string& m) : std::runtime_error(m) {}
};
struct PreconditionFailed : std::runtime_error {
    explicit PreconditionFailed(const std::string& m) : std::runtime_error(m) {}
};
struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& m) : std::runtime_error(m) {}
};
struct NotUnique : std::runtime_error {
    explicit NotUnique(const std::string& m) : std::runtime_error(m) {}
};
struct SearchSpaceTooLarge : std::runtime_error {
    explicit SearchSpaceTooLarge(const std::string& m) : std::runtime_error(m) {}
};

/// Special G-Frobenius data: sector presentations r_g/i_g over the untwisted
/// Milnor ring, the cocycle pair (gamma, phi_{g,h}), the character, the sign
/// homomorphism, shifts and sector metrics.
struct SpecialGFrob {
    QuotientRing Ae;
    MatrixGroup G;
    long ambient_order = 1;
    std::vector<CMat> phiAe;             // action on A_e per group element
    std::vector<Cyclotomic> chi;
    ParityChoice sigma;                  // the sign homomorphism
    std::vector<int> sector_parity;      // sigma(g) + |N_g| mod 2

    struct Sector {
        QuotientRing ring;               // Milnor ring of f|Fix_g
        CMat i_mat;                      // dim(Ae) x dim(A_g)
        CMat r_mat;                      // dim(A_g) x dim(Ae)
        Rat d_g;                         // socle degree of the sector ring
        Rat s;                           // shift s_g
        CMat eta_g;                      // rescaled sector metric on the sector basis
    };
    std::vector<Sector> sectors;         // indexed by group element

    std::map<std::pair<int, int>, CVec> gamma;        // (g,h) -> A_e coordinates
    std::map<std::pair<int, int>, Cyclotomic> phigh;  // phi_{g,h} scalars
    Rat d;                               // degree of the untwisted counit

    int dimAe() const { return Ae.dim(); }
    CVec gamma_at(int g, int h) const;
    /// pi_g = i_g o r_g as a matrix on A_e
    CMat pi(int g) const;
    /// basis of I_g = ker(r_g)
    std::vector<CVec> annihilator(int g) const;
    /// A_e-degree slice of i_g(A_g): image columns of degree exactly deg
    std::vector<CVec> image_slice(int g, const Rat& deg) const;
};

/// Frobenius algebra on i_g(A_g) with a o_g b = pi_g(a b) and the sector metric.
FrobAlgebra sector_frobenius(const SpecialGFrob& S, int g);

/// graded / associative / section-independent cocycle conditions
CheckReport check_cocycle(const SpecialGFrob& S);

/// non-abelian cocycle identities: grouphom, the (Koszul-signed) compatibility,
/// the algebra-automorphism identity, phi_{g^-1, g h g^-1} = phi_{g,h}^{-1}, and
/// the section-4.8 consequences in their super form.
CheckReport check_nonabelian(const SpecialGFrob& S);

/// the unique element with eta(x, I_g) = 0 and eta(x, i_g(rho_g)) = 1, where
/// rho_g is the defining element of the stored sector metric; consistency with
/// the stored gamma is asserted.
CVec gamma_diag(const SpecialGFrob& S, int g);

/// standard shift: s_g = (d - d_g)/2 + sum_{i in N_g} (a_i - 1/2)
struct Shifts {
    Rat s_plus, s_minus, s;
};
Shifts standard_shift(const Rat& d, const Rat& d_g, const std::vector<Rat>& moved_args);

/// Reconstruction: assemble the G-Frobenius algebra; throws PreconditionFailed
/// carrying the first violated condition.
GFrobenius reconstruct(const SpecialGFrob& S);

/// Enumerate graded cocycles compatible with the stored diagonal gauge and the
/// phi scalars; deterministic order; first entry is the canonical solution,
/// followed by the conjugate-branch (all square roots negated) when distinct.
std::vector<std::map<std::pair<int, int>, CVec>> solve_gamma(const SpecialGFrob& S,
                                                             size_t search_bound = 100000);

}  // namespace orbifrob
