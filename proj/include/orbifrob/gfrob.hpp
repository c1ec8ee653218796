#pragma once

#include "orbifrob/frobenius.hpp"
#include "orbifrob/group.hpp"

namespace orbifrob {

struct GroupMismatch : std::runtime_error {
    explicit GroupMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct CharacterMismatch : std::runtime_error {
    explicit CharacterMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidRamond : std::runtime_error {
    explicit InvalidRamond(const std::string& m) : std::runtime_error(m) {}
};

// sparse row of structure constants
using SVec = std::vector<std::pair<int, Cyclotomic>>;

/// G-twisted Frobenius algebra <G, A, o, 1, eta, phi, chi> with flattened basis.
struct GFrobenius {
    MatrixGroup group;
    std::vector<int> sec;              // sector (group element index) per basis element
    std::vector<std::string> labels;
    std::vector<std::vector<SVec>> mult;
    CMat eta;
    std::vector<CMat> phi;             // one matrix per group element (column-action)
    std::vector<Cyclotomic> chi;
    CVec unit;
    std::vector<int> parity;           // Z/2 degree per basis element (all zero = plain)
    std::optional<std::vector<Rat>> deg;     // E-grading
    std::optional<std::vector<Rat>> degbar;  // second component of the bigrading
    Rat d_alg = Rat(0);                // degree of the unit
    Rat d_ref = Rat(0);                // the "d" of the untwisted sector (Ramond shift -d/2)

    int dim() const { return int(sec.size()); }
    bool is_super() const;
    std::vector<int> sector_basis(int g) const;
    int sector_dim(int g) const;

    CVec basis_vec(int i) const;
    CVec mul(const CVec& a, const CVec& b) const;
    Cyclotomic eta_form(const CVec& a, const CVec& b) const;
    CVec apply_phi(int g, const CVec& a) const;
    /// matrix of left multiplication by c
    CMat left_mult(const CVec& c) const;
    /// super-trace of a matrix w.r.t. the stored parities
    Cyclotomic supertrace(const CMat& m) const;
    /// trace of m restricted to the sector-g diagonal block (plain or super)
    Cyclotomic block_trace(const CMat& m, int g, bool super) const;
};

/// the full axiom report of section-2 (super variants where parity nontrivial)
CheckReport check_gfrob(const GFrobenius& A);

/// chi candidates read off the trace identity STr(id|A_g) = chi_g Tr(phi_g|A_e),
/// with the Eq.-9 sign ambiguity flagged (only chi^2 from eta(phi_g(rho),1)).
struct ChiDiagnosis {
    std::vector<std::optional<Cyclotomic>> chi;  // nullopt = indeterminate
    std::vector<bool> sign_ambiguous;
    std::vector<Cyclotomic> chi_squared_inverse;  // from eta(phi_g(rho), 1)
};
ChiDiagnosis chi_from_phi(const GFrobenius& A);

struct InvariantsResult {
    FrobAlgebra algebra;        // metric attached only when frobenius == true
    bool frobenius = false;
    Cyclotomic criterion_sum;   // sum_g chi_g^{-2}
    CMat inclusion;             // dim x k matrix of invariant basis vectors
};
InvariantsResult invariants(const GFrobenius& A);

/// Ramond space: same carrier, action twisted by chi, degrees shifted by -d/2.
struct RamondSpace {
    GFrobenius V;  // phi here is phibar = chi * phi; deg shifted
};
RamondSpace ramond(const GFrobenius& A);
GFrobenius unramond(const RamondSpace& V);
/// Ramond axiom list (a, b', c', d, 1'..4'); throws nothing, reports.
CheckReport check_ramond(const RamondSpace& V);

GFrobenius gf_restrict(const GFrobenius& A, const std::vector<int>& subgroup_elems);

GFrobenius gf_direct_sum(const GFrobenius& A, const GFrobenius& B);
GFrobenius gf_tensor(const GFrobenius& A, const GFrobenius& B);

struct BraidedResult {
    GFrobenius T;       // multiplication, grading and the displayed action; no metric
    CheckReport report; // associativity + grading verified; the rest reported untested
};
BraidedResult braided_tensor(const GFrobenius& A, const GFrobenius& B);

/// structural equality of groups (element matrices and tables)
bool same_group(const MatrixGroup& G, const MatrixGroup& H);

}  // namespace orbifrob
