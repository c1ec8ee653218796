#pragma once

#include "orbifrob/groebner.hpp"

namespace orbifrob {

struct NonIsolated : std::runtime_error {
    explicit NonIsolated(const std::string& m) : std::runtime_error(m) {}
};

/// Milnor ring A = k[x]/J_f presented by its standard-monomial basis, with the
/// residue-pairing counit normalized so that eps(rho) = 1 for the monic socle
/// monomial rho (the Hessian class is stored alongside; it spans the same line).
struct QuotientRing {
    std::vector<std::string> vars;
    std::vector<Rat> weights;
    MonomialOrder ord;
    std::vector<MultiPoly> gb;       // reduced Groebner basis of the ideal
    std::vector<Exps> basis;         // standard monomials, sorted by (wdeg, lex)
    std::map<Exps, int> index;
    std::vector<Rat> degrees;        // quasi-homogeneous degree per basis element
    int socle = -1;                  // index of rho
    Rat socle_degree;                // D
    std::vector<Cyclotomic> hessian_class;  // coordinates of NF(det Hess f)
    // mult[i][j] = dense coordinate vector of basis_i * basis_j
    std::vector<std::vector<std::vector<Cyclotomic>>> mult;

    int dim() const { return int(basis.size()); }

    std::vector<Cyclotomic> to_coords(const MultiPoly& p) const;  // NF + expand
    MultiPoly from_coords(const std::vector<Cyclotomic>& v) const;
    MultiPoly reduce(const MultiPoly& p) const;

    std::vector<Cyclotomic> mul_coords(const std::vector<Cyclotomic>& a,
                                       const std::vector<Cyclotomic>& b) const;

    /// counit: coefficient of rho
    Cyclotomic eps_coords(const std::vector<Cyclotomic>& v) const { return v[socle]; }
    /// residue pairing eta(a, b) = eps(a * b)
    Cyclotomic eta_coords(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const;
};

/// determinant of the matrix of second partials, exact
MultiPoly hessian(const MultiPoly& f);

/// Milnor ring of a quasi-homogeneous polynomial of degree 1 in the given weights.
/// Throws NotQuasiHomogeneous / NonIsolated. Zero variables gives the ground field.
QuotientRing milnor_ring(const MultiPoly& f, const std::vector<Rat>& weights);

/// Quotient ring by an arbitrary zero-dimensional ideal (used by tests and the
/// groebner_normal_form surface); degrees computed with the given weights.
QuotientRing quotient_ring(const std::vector<MultiPoly>& ideal_gens,
                           const std::vector<std::string>& vars, const std::vector<Rat>& weights,
                           const MultiPoly* hess = nullptr);

}  // namespace orbifrob
