#pragma once

#include <vector>

#include "orbifrob/cyclotomic.hpp"

namespace orbifrob {

using CVec = std::vector<Cyclotomic>;
using CMat = std::vector<CVec>;  // row-major

CMat cmat_zero(size_t r, size_t c);
CMat cmat_identity(size_t n);
CMat cmat_mul(const CMat& a, const CMat& b);
CVec cmat_apply(const CMat& a, const CVec& v);
CMat cmat_add(const CMat& a, const CMat& b);
CMat cmat_scale(const CMat& a, const Cyclotomic& s);
bool cmat_eq(const CMat& a, const CMat& b);
CMat cmat_transpose(const CMat& a);

Cyclotomic cmat_det(CMat a);
Cyclotomic cmat_trace(const CMat& a);
size_t cmat_rank(CMat a);
/// inverse; throws std::domain_error if singular
CMat cmat_inverse(const CMat& a);
/// basis of the kernel (columns as vectors)
std::vector<CVec> cmat_kernel(CMat a);
/// basis of the column space, taken from the original columns (pivot columns)
std::vector<CVec> cmat_column_space(const CMat& a);
/// solve A x = b; empty optional if inconsistent
std::optional<CVec> cmat_solve(CMat a, CVec b);

}  // namespace orbifrob
