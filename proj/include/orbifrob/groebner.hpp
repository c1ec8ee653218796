#pragma once

#include "orbifrob/poly.hpp"

namespace orbifrob {

/// leading term w.r.t. the order; polynomial must be nonzero
const std::pair<const Exps, Cyclotomic>& leading_term(const MultiPoly& p, const MonomialOrder& ord);

/// multivariate division: the unique normal form of p modulo G (G need not be a
/// Groebner basis for uniqueness in general, but is wherever we call this).
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& gens, const MonomialOrder& ord);

/// reduced Groebner basis of the ideal generated by gens (Buchberger).
std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, const MonomialOrder& ord);

/// normal form of p against the Groebner completion of ideal_gens
MultiPoly groebner_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& ideal_gens,
                               const MonomialOrder& ord);

}  // namespace orbifrob
