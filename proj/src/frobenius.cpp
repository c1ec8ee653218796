#include "orbifrob/frobenius.hpp"

#include <sstream>

namespace orbifrob {

namespace {
std::string ws(int i, int j = -1, int k = -1) {
    std::ostringstream os;
    os << "basis(" << i;
    if (j >= 0) os << "," << j;
    if (k >= 0) os << "," << k;
    os << ")";
    return os.str();
}
}  // namespace

bool FrobAlgebra::is_super() const {
    if (!parity) return false;
    for (int p : *parity)
        if (p) return true;
    return false;
}

CVec FrobAlgebra::mul(const CVec& a, const CVec& b) const {
    CVec out(dim(), Cyclotomic::zero());
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            Cyclotomic c = a[i] * b[j];
            for (int k = 0; k < dim(); ++k)
                if (!mult[i][j][k].is_zero()) out[k] += c * mult[i][j][k];
        }
    }
    return out;
}

Cyclotomic FrobAlgebra::eta_form(const CVec& a, const CVec& b) const {
    Cyclotomic out = Cyclotomic::zero();
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j)
            if (!b[j].is_zero() && !eta[i][j].is_zero()) out += a[i] * b[j] * eta[i][j];
    }
    return out;
}

CVec FrobAlgebra::basis_vec(int i) const {
    CVec v(dim(), Cyclotomic::zero());
    v[i] = Cyclotomic::one();
    return v;
}

FrobAlgebra FrobAlgebra::ground_field() {
    FrobAlgebra A;
    A.labels = {"1"};
    A.mult = {{{Cyclotomic::one()}}};
    A.eta = {{Cyclotomic::one()}};
    A.unit = {Cyclotomic::one()};
    A.deg = std::vector<Rat>{Rat(0)};
    A.d = Rat(0);
    A.D = Rat(0);
    return A;
}

FrobAlgebra FrobAlgebra::from_quotient_ring(const QuotientRing& Q) {
    FrobAlgebra A;
    for (const auto& e : Q.basis) {
        std::string l;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!l.empty()) l += "*";
            l += Q.vars[i];
            if (e[i] > 1) l += "^" + std::to_string(e[i]);
        }
        A.labels.push_back(l.empty() ? "1" : l);
    }
    int n = Q.dim();
    A.mult.assign(n, std::vector<CVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A.mult[i][j] = Q.mult[i][j];
    A.eta = cmat_zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A.eta[i][j] = Q.eta_coords(A.basis_vec(i), A.basis_vec(j));
    A.unit = CVec(n, Cyclotomic::zero());
    A.unit[0] = Cyclotomic::one();
    A.deg = Q.degrees;
    A.d = Rat(0);
    A.D = Q.socle_degree;
    return A;
}

CheckReport check_frobenius(const FrobAlgebra& A) {
    CheckReport R;
    int n = A.dim();
    const bool super = A.parity.has_value();
    auto par = [&](int i) { return A.parity ? (*A.parity)[i] % 2 : 0; };

    // unit
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i) {
            CVec l = A.mul(A.unit, A.basis_vec(i));
            CVec r = A.mul(A.basis_vec(i), A.unit);
            if (l != A.basis_vec(i) || r != A.basis_vec(i)) {
                ok = false;
                w = ws(i);
            }
        }
        R.add("unit", ok, w);
    }
    // associativity on all basis triples
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k) {
                    CVec l = A.mul(A.mul(A.basis_vec(i), A.basis_vec(j)), A.basis_vec(k));
                    CVec r = A.mul(A.basis_vec(i), A.mul(A.basis_vec(j), A.basis_vec(k)));
                    if (l != r) {
                        ok = false;
                        w = ws(i, j, k);
                    }
                }
        R.add("associativity", ok, w);
    }
    // (super-)commutativity
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                CVec l = A.mul(A.basis_vec(i), A.basis_vec(j));
                CVec r = A.mul(A.basis_vec(j), A.basis_vec(i));
                if (super && par(i) && par(j))
                    for (auto& x : r) x = -x;
                if (l != r) {
                    ok = false;
                    w = ws(i, j);
                }
            }
        R.add(super ? "super-commutativity" : "commutativity", ok, w);
    }
    // invariance eta(a, b c) = eta(a b, c)
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k) {
                    Cyclotomic l = A.eta_form(A.basis_vec(i), A.mul(A.basis_vec(j), A.basis_vec(k)));
                    Cyclotomic r = A.eta_form(A.mul(A.basis_vec(i), A.basis_vec(j)), A.basis_vec(k));
                    if (!(l == r)) {
                        ok = false;
                        w = ws(i, j, k);
                    }
                }
        R.add("invariance", ok, w);
    }
    // non-degeneracy
    R.add("eta non-degenerate", cmat_rank(A.eta) == size_t(n));
    // grading
    if (A.deg && A.d && A.D) {
        const auto& dg = *A.deg;
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (!A.eta[i][j].is_zero() && dg[i] + dg[j] != *A.d + *A.D) {
                    ok = false;
                    w = ws(i, j);
                }
        R.add("eta homogeneous of degree d+D", ok, w);
        ok = true;
        w.clear();
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                CVec p = A.mul(A.basis_vec(i), A.basis_vec(j));
                for (int k = 0; k < n; ++k)
                    if (!p[k].is_zero() && dg[k] != dg[i] + dg[j] - *A.d) {
                        ok = false;
                        w = ws(i, j, k);
                    }
            }
        R.add("multiplication homogeneous of degree d", ok, w);
        // unit degree
        bool unit_ok = true;
        for (int i = 0; i < n; ++i)
            if (!A.unit[i].is_zero() && dg[i] != *A.d) unit_ok = false;
        R.add("unit homogeneous of degree d", unit_ok);
    }
    if (super) {
        // unit even, eta even, multiplication parity-additive
        bool unit_even = true;
        for (int i = 0; i < n; ++i)
            if (!A.unit[i].is_zero() && par(i)) unit_even = false;
        R.add("unit even", unit_even);
        bool eta_even = true;
        std::string w;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!A.eta[i][j].is_zero() && (par(i) + par(j)) % 2) {
                    eta_even = false;
                    w = ws(i, j);
                }
        R.add("eta even", eta_even, w);
        bool mult_par = true;
        w.clear();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CVec p = A.mul(A.basis_vec(i), A.basis_vec(j));
                for (int k = 0; k < n; ++k)
                    if (!p[k].is_zero() && (par(i) + par(j) - par(k)) % 2) {
                        mult_par = false;
                        w = ws(i, j, k);
                    }
            }
        R.add("multiplication preserves parity", mult_par, w);
    }
    return R;
}

CounitRho counit_rho(const FrobAlgebra& A) {
    int n = A.dim();
    if (cmat_rank(A.eta) != size_t(n)) throw DegenerateEta("counit_rho requires non-degenerate eta");
    CounitRho out;
    out.eps.assign(n, Cyclotomic::zero());
    for (int i = 0; i < n; ++i) out.eps[i] = A.eta_form(A.basis_vec(i), A.unit);
    // rho: Poincare dual of 1 -- the homogeneous top-degree element normalized
    // by eps(rho) = 1. Unique when the top graded piece is one-dimensional.
    if (A.deg && A.D) {
        int top = -1, count = 0;
        for (int i = 0; i < n; ++i)
            if ((*A.deg)[i] == *A.D) {
                top = i;
                ++count;
            }
        if (count != 1) throw DegenerateEta("top graded piece is not one-dimensional");
        Cyclotomic e = out.eps[top];
        if (e.is_zero()) throw DegenerateEta("counit vanishes on the top graded piece");
        out.rho = CVec(n, Cyclotomic::zero());
        out.rho[top] = e.inverse();
    } else if (n == 1) {
        if (out.eps[0].is_zero()) throw DegenerateEta("counit vanishes");
        out.rho = CVec{out.eps[0].inverse()};
    } else {
        throw std::invalid_argument("counit_rho: rho requires a grading on dim > 1 algebras");
    }
    // mu-dictionary round trip: a*b = sum mu(a,b,Delta_i) eta^{ij} Delta_j
    CMat etainv = cmat_inverse(A.eta);
    out.mu_round_trip_ok = true;
    for (int a = 0; a < n && out.mu_round_trip_ok; ++a)
        for (int b = 0; b < n && out.mu_round_trip_ok; ++b) {
            CVec direct = A.mul(A.basis_vec(a), A.basis_vec(b));
            CVec rebuilt(n, Cyclotomic::zero());
            for (int i = 0; i < n; ++i) {
                Cyclotomic mu = A.eta_form(direct, A.basis_vec(i));
                if (mu.is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    if (!etainv[i][j].is_zero()) rebuilt[j] += mu * etainv[i][j];
            }
            if (rebuilt != direct) out.mu_round_trip_ok = false;
        }
    return out;
}

std::map<Rat, int> char_series(const FrobAlgebra& A) {
    if (!A.deg) throw std::invalid_argument("char_series requires a grading");
    std::map<Rat, int> s;
    for (const auto& d : *A.deg) s[d] += 1;
    return s;
}

std::map<Rat, int> char_series_scaled(const FrobAlgebra& A, const Rat& lambda) {
    std::map<Rat, int> s;
    for (const auto& [d, m] : char_series(A)) s[d + lambda] = m;
    return s;
}

DirectSumResult direct_sum(const FrobAlgebra& A, const FrobAlgebra& B) {
    DirectSumResult out;
    int na = A.dim(), nb = B.dim(), n = na + nb;
    FrobAlgebra& S = out.sum;
    for (const auto& l : A.labels) S.labels.push_back("L:" + l);
    for (const auto& l : B.labels) S.labels.push_back("R:" + l);
    S.mult.assign(n, std::vector<CVec>(n, CVec(n, Cyclotomic::zero())));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < na; ++k) S.mult[i][j][k] = A.mult[i][j][k];
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < nb; ++k) S.mult[na + i][na + j][na + k] = B.mult[i][j][k];
    S.eta = cmat_zero(n, n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) S.eta[i][j] = A.eta[i][j];
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) S.eta[na + i][na + j] = B.eta[i][j];
    S.unit = CVec(n, Cyclotomic::zero());
    for (int i = 0; i < na; ++i) S.unit[i] = A.unit[i];
    for (int i = 0; i < nb; ++i) S.unit[na + i] = B.unit[i];
    if (A.parity || B.parity) {
        std::vector<int> p(n, 0);
        for (int i = 0; i < na; ++i) p[i] = A.parity ? (*A.parity)[i] : 0;
        for (int i = 0; i < nb; ++i) p[na + i] = B.parity ? (*B.parity)[i] : 0;
        S.parity = p;
    }

    // grading: scalings lambda', lambda'' with D' l' = D'' l'' and (D'+d') l' = (D''+d'') l''
    if (A.deg && B.deg && A.d && B.d && A.D && B.D) {
        Rat dA = *A.d, DA = *A.D, dB = *B.d, DB = *B.D;
        bool solvable = false;
        Rat lA(1), lB(1);
        if (DA == 0 && DB == 0) {
            // both conditions reduce to d' l' = d'' l''
            if (dA == 0 && dB == 0) {
                solvable = true;
            } else if (dA != 0 && dB != 0) {
                solvable = true;
                lB = dA / dB;
            }
        } else if (DA != 0 && DB != 0) {
            // lB = lA * DA/DB; then need dA*lA = dB*lB  <=> dA*DB == dB*DA
            if (dA * DB == dB * DA) {
                solvable = true;
                lB = DA / DB;
            }
        }
        if (solvable) {
            std::vector<Rat> dg;
            for (const auto& x : *A.deg) dg.push_back(x * lA);
            for (const auto& x : *B.deg) dg.push_back(x * lB);
            S.deg = dg;
            S.d = dA * lA;
            S.D = DA * lA;
            out.graded = true;
        } else {
            out.warning = "gradings admit no common scaling (eq. D'+d' = D''+d'', D'=D''); result ungraded";
        }
    } else {
        out.warning = "operands not both graded; result ungraded";
    }
    return out;
}

FrobAlgebra tensor(const FrobAlgebra& A, const FrobAlgebra& B) {
    int na = A.dim(), nb = B.dim(), n = na * nb;
    auto idx = [&](int i, int j) { return i * nb + j; };
    auto parA = [&](int i) { return A.parity ? (*A.parity)[i] % 2 : 0; };
    auto parB = [&](int j) { return B.parity ? (*B.parity)[j] % 2 : 0; };
    FrobAlgebra T;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) T.labels.push_back(A.labels[i] + "(x)" + B.labels[j]);
    T.mult.assign(n, std::vector<CVec>(n, CVec(n, Cyclotomic::zero())));
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2) {
                    // Koszul sign from moving b_{j1} past a_{i2}
                    int sign = (parB(j1) * parA(i2)) % 2;
                    for (int k1 = 0; k1 < na; ++k1) {
                        if (A.mult[i1][i2][k1].is_zero()) continue;
                        for (int k2 = 0; k2 < nb; ++k2) {
                            if (B.mult[j1][j2][k2].is_zero()) continue;
                            Cyclotomic c = A.mult[i1][i2][k1] * B.mult[j1][j2][k2];
                            if (sign) c = -c;
                            T.mult[idx(i1, j1)][idx(i2, j2)][idx(k1, k2)] += c;
                        }
                    }
                }
    T.eta = cmat_zero(n, n);
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2) {
                    Cyclotomic c = A.eta[i1][i2] * B.eta[j1][j2];
                    // Koszul sign for the pairing of odd factors
                    if ((parB(j1) * parA(i2)) % 2) c = -c;
                    T.eta[idx(i1, j1)][idx(i2, j2)] = c;
                }
    T.unit = CVec(n, Cyclotomic::zero());
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) T.unit[idx(i, j)] = A.unit[i] * B.unit[j];
    if (A.deg && B.deg) {
        std::vector<Rat> dg(n);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) dg[idx(i, j)] = (*A.deg)[i] + (*B.deg)[j];
        T.deg = dg;
        if (A.d && B.d) T.d = *A.d + *B.d;
        if (A.D && B.D) T.D = *A.D + *B.D;
    }
    if (A.parity || B.parity) {
        std::vector<int> p(n);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) p[idx(i, j)] = (parA(i) + parB(j)) % 2;
        T.parity = p;
    }
    return T;
}

CheckReport check_euler(const FrobAlgebra& A, const std::vector<Rat>& E_eigs, const Rat& d,
                        const Rat& D) {
    CheckReport R;
    int n = A.dim();
    // conformal: eta(Ea, b) + eta(a, Eb) = D eta(a, b)
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n; ++j) {
                Cyclotomic lhs = Cyclotomic::from_rat(E_eigs[i] + E_eigs[j]) * A.eta[i][j];
                Cyclotomic rhs = Cyclotomic::from_rat(D) * A.eta[i][j];
                if (!(lhs == rhs)) {
                    ok = false;
                    w = ws(i, j);
                    break;
                }
            }
        R.add("conformal: eta(Ea,b)+eta(a,Eb) = D eta(a,b)", ok, w);
    }
    // derivation up to -d: E(ab) = (Ea)b + a(Eb) - d ab
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n; ++j) {
                CVec p = A.mul(A.basis_vec(i), A.basis_vec(j));
                bool bad = false;
                for (int k = 0; k < n; ++k)
                    if (!p[k].is_zero() && E_eigs[k] != E_eigs[i] + E_eigs[j] - d) bad = true;
                if (bad) {
                    ok = false;
                    w = ws(i, j);
                    break;
                }
            }
        R.add("natural: E(ab) = (Ea)b + a(Eb) - d ab", ok, w);
    }
    if (A.deg) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if ((*A.deg)[i] != E_eigs[i]) ok = false;
        R.add("eigenvalues reproduce stored grading", ok);
    }
    return R;
}

}  // namespace orbifrob
