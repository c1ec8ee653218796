#include "orbifrob/group.hpp"

#include <algorithm>
#include <functional>

namespace orbifrob {

bool MatrixGroup::is_abelian() const {
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (mul[a][b] != mul[b][a]) return false;
    return true;
}

int MatrixGroup::power(int g, long k) const {
    long m = order[g];
    k %= m;
    if (k < 0) k += m;
    int r = e();
    for (long i = 0; i < k; ++i) r = mul[r][g];
    return r;
}

int MatrixGroup::commutator(int g, int h) const {
    return mul[mul[g][h]][mul[inv[g]][inv[h]]];
}

int MatrixGroup::cyclic_generator() const {
    for (int g = 0; g < size(); ++g)
        if (order[g] == long(size())) return g;
    return size() == 1 ? 0 : -1;
}

bool MatrixGroup::is_cyclic() const { return cyclic_generator() >= 0; }

MatrixGroup generate_group(const std::vector<CMat>& gens, int bound) {
    MatrixGroup G;
    if (gens.empty()) throw std::invalid_argument("generate_group: no generators");
    G.n = int(gens[0].size());
    CMat id = cmat_identity(G.n);
    G.elems.push_back(id);

    auto find = [&](const CMat& m) -> int {
        for (int i = 0; i < int(G.elems.size()); ++i)
            if (cmat_eq(G.elems[i], m)) return i;
        return -1;
    };

    std::vector<CMat> gen_mats;
    for (const auto& g : gens) {
        if (int(g.size()) != G.n) throw std::invalid_argument("generator dimension mismatch");
        if (cmat_det(g).is_zero()) throw std::invalid_argument("generator not invertible");
        gen_mats.push_back(g);
        if (find(g) < 0) {
            G.elems.push_back(g);
            G.gens.push_back(int(G.elems.size()) - 1);
        } else {
            G.gens.push_back(find(g));
        }
    }

    // breadth-first closure
    size_t head = 0;
    while (head < G.elems.size()) {
        CMat cur = G.elems[head];
        for (const auto& g : gen_mats) {
            CMat prod = cmat_mul(cur, g);
            if (find(prod) < 0) {
                if (int(G.elems.size()) >= bound)
                    throw NotFinite("group closure exceeds bound");
                G.elems.push_back(prod);
            }
        }
        ++head;
    }

    int N = G.size();
    G.mul.assign(N, std::vector<int>(N, -1));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            int idx = find(cmat_mul(G.elems[a], G.elems[b]));
            if (idx < 0) throw std::logic_error("closure not closed");
            G.mul[a][b] = idx;
        }
    G.inv.assign(N, -1);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (G.mul[a][b] == 0) G.inv[a] = b;
    G.conj.assign(N, std::vector<int>(N, -1));
    for (int h = 0; h < N; ++h)
        for (int g = 0; g < N; ++g) G.conj[h][g] = G.mul[G.mul[h][g]][G.inv[h]];
    G.order.assign(N, 1);
    for (int a = 0; a < N; ++a) {
        int x = a;
        long k = 1;
        while (x != 0) {
            x = G.mul[x][a];
            ++k;
        }
        G.order[a] = k;
        G.exponent = std::lcm(G.exponent, k);
    }
    return G;
}

GroupElementData element_data(const MatrixGroup& G, int g, long ambient_order) {
    const CMat& m = G.elems[g];
    int n = G.n;
    long r = G.order[g];
    if (ambient_order % r != 0)
        throw FieldTooSmall("ambient cyclotomic order must be divisible by the element order");

    GroupElementData d;
    d.eigen_args.assign(n, Rat(0));

    bool diagonal = true;
    for (int i = 0; i < n && diagonal; ++i)
        for (int j = 0; j < n && diagonal; ++j)
            if (i != j && !m[i][j].is_zero()) diagonal = false;

    std::vector<CVec> cols_fixed, cols_moved;
    std::vector<Rat> args_fixed, args_moved;

    if (diagonal) {
        for (int i = 0; i < n; ++i) {
            auto a = m[i][i].as_root_of_unity();
            if (!a) throw FieldTooSmall("diagonal entry is not a root of unity in the ambient field");
            CVec e(n, Cyclotomic::zero());
            e[i] = Cyclotomic::one();
            if (*a == 0) {
                cols_fixed.push_back(e);
                args_fixed.push_back(*a);
            } else {
                cols_moved.push_back(e);
                args_moved.push_back(*a);
            }
        }
    } else {
        // eigenvalues are r-th roots of unity; collect kernel bases of (m - lambda I)
        int found = 0;
        for (long k = 0; k < r; ++k) {
            Cyclotomic lam = Cyclotomic::root(r, k);
            CMat shifted = m;
            for (int i = 0; i < n; ++i) shifted[i][i] -= lam;
            auto ker = cmat_kernel(shifted);
            for (const auto& v : ker) {
                if (k == 0) {
                    cols_fixed.push_back(v);
                    args_fixed.push_back(Rat(0));
                } else {
                    cols_moved.push_back(v);
                    args_moved.push_back(Rat(k, r));
                }
                ++found;
            }
        }
        if (found != n)
            throw FieldTooSmall("element not diagonalizable over the ambient cyclotomic field");
    }

    d.det = Cyclotomic::one();
    d.diag_basis = cmat_zero(n, n);
    int col = 0;
    for (size_t i = 0; i < cols_fixed.size(); ++i, ++col) {
        d.eigen_args[col] = args_fixed[i];
        d.fixed.push_back(col);
        for (int rix = 0; rix < n; ++rix) d.diag_basis[rix][col] = cols_fixed[i][rix];
    }
    for (size_t i = 0; i < cols_moved.size(); ++i, ++col) {
        d.eigen_args[col] = args_moved[i];
        d.moved.push_back(col);
        d.det = d.det * Cyclotomic::root_frac(args_moved[i]);
        for (int rix = 0; rix < n; ++rix) d.diag_basis[rix][col] = cols_moved[i][rix];
    }
    d.fix_basis = cmat_zero(n, cols_fixed.size());
    for (size_t j = 0; j < cols_fixed.size(); ++j)
        for (int i = 0; i < n; ++i) d.fix_basis[i][j] = cols_fixed[j][i];
    d.moved_basis = cmat_zero(n, cols_moved.size());
    for (size_t j = 0; j < cols_moved.size(); ++j)
        for (int i = 0; i < n; ++i) d.moved_basis[i][j] = cols_moved[j][i];
    return d;
}

Cyclotomic det_on_moved(const MatrixGroup& G, int g, int h, long ambient_order) {
    GroupElementData dg = element_data(G, g, ambient_order);
    GroupElementData dh = element_data(G, h, ambient_order);
    if (dh.fixed.empty()) return dg.det;
    // det(g|_{T_h}): g restricted to Fix_h in the h-adapted basis; when g does not
    // preserve Fix_h the paper's convention det(g)det^{-1}(g|_{T_h}) with the
    // compression of g to Fix_h is used.
    size_t t = dh.fixed.size();
    // solve Fix-basis coordinates of g * fix_basis
    CMat gycols = cmat_mul(G.elems[g], dh.fix_basis);
    CMat comp = cmat_zero(t, t);
    // least-structure solve: [fix_basis | moved_basis]^{-1} * gycols, take top block
    CMat full = cmat_zero(G.n, G.n);
    for (int i = 0; i < G.n; ++i) {
        for (size_t j = 0; j < t; ++j) full[i][j] = dh.fix_basis[i][j];
        for (size_t j = 0; j < dh.moved.size(); ++j) full[i][t + j] = dh.moved_basis[i][j];
    }
    CMat fullinv = cmat_inverse(full);
    CMat coords = cmat_mul(fullinv, gycols);
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) comp[i][j] = coords[i][j];
    Cyclotomic dt = cmat_det(comp);
    if (dt.is_zero()) throw std::logic_error("det(g|T_h) singular");
    return dg.det / dt;
}

std::vector<ParityChoice> enumerate_parities(const MatrixGroup& G) {
    int N = G.size();
    std::vector<ParityChoice> out;
    int ng = int(G.gens.size());
    for (int mask = 0; mask < (1 << ng); ++mask) {
        // propagate generator assignments through BFS words
        std::vector<int> val(N, -1);
        val[0] = 0;
        bool ok = true;
        // iterate until stable: val[a*gen] = val[a] + bit
        for (int pass = 0; pass < N + 1 && ok; ++pass) {
            bool changed = false;
            for (int a = 0; a < N && ok; ++a) {
                if (val[a] < 0) continue;
                for (int gi = 0; gi < ng; ++gi) {
                    int b = G.mul[a][G.gens[gi]];
                    int v = (val[a] + ((mask >> gi) & 1)) % 2;
                    if (val[b] < 0) {
                        val[b] = v;
                        changed = true;
                    } else if (val[b] != v) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!changed) break;
        }
        if (!ok) continue;
        // verify homomorphism on the full table
        for (int a = 0; a < N && ok; ++a)
            for (int b = 0; b < N; ++b)
                if ((val[a] + val[b]) % 2 != val[G.mul[a][b]]) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        ParityChoice p;
        p.value = val;
        bool dup = false;
        for (const auto& q : out)
            if (q.value == p.value) dup = true;
        if (!dup) out.push_back(p);
    }
    return out;
}

bool check_discrete_torsion(const MatrixGroup& G, const DiscreteTorsion& eps) {
    int N = G.size();
    auto commutes = [&](int a, int b) { return G.mul[a][b] == G.mul[b][a]; };
    for (int g = 0; g < N; ++g) {
        for (int h = 0; h < N; ++h) {
            if (!commutes(g, h)) continue;
            if (!(eps(g, h) == eps(G.inv[h], g))) return false;
        }
        if (!eps(g, g).is_one()) return false;
    }
    for (int g1 = 0; g1 < N; ++g1)
        for (int g2 = 0; g2 < N; ++g2)
            for (int h = 0; h < N; ++h) {
                if (!commutes(g1, h) || !commutes(g2, h) || !commutes(G.mul[g1][g2], h)) continue;
                if (!(eps(G.mul[g1][g2], h) == eps(g1, h) * eps(g2, h))) return false;
            }
    return true;
}

std::vector<DiscreteTorsion> enumerate_discrete_torsion(const MatrixGroup& G) {
    int N = G.size();
    if (N > 64) throw std::invalid_argument("torsion enumeration bounded at |G| <= 64");
    auto commutes = [&](int a, int b) { return G.mul[a][b] == G.mul[b][a]; };

    // commuting pairs in a fixed order
    std::vector<std::pair<int, int>> pairs;
    for (int g = 0; g < N; ++g)
        for (int h = 0; h < N; ++h)
            if (commutes(g, h)) pairs.emplace_back(g, h);

    // candidate values for eps(g,h): roots of unity of order dividing gcd(|g|,|h|)
    // (bimultiplicativity forces eps(g,h)^{ord g} = eps(g,h)^{ord h} = 1)
    std::vector<DiscreteTorsion> out;
    DiscreteTorsion cur;

    std::function<void(size_t)> dfs = [&](size_t k) {
        if (out.size() > 4096) throw std::runtime_error("torsion enumeration blow-up");
        if (k == pairs.size()) {
            if (check_discrete_torsion(G, cur)) {
                bool dup = false;
                for (const auto& t : out) {
                    bool same = true;
                    for (const auto& pr : pairs)
                        if (!(t(pr.first, pr.second) == cur(pr.first, pr.second))) {
                            same = false;
                            break;
                        }
                    if (same) dup = true;
                }
                if (!dup) out.push_back(cur);
            }
            return;
        }
        auto [g, h] = pairs[k];
        // determined cases first
        if (g == 0 || h == 0 || g == h) {
            cur.value[{g, h}] = Cyclotomic::one();
            dfs(k + 1);
            cur.value.erase({g, h});
            return;
        }
        // if computable from earlier assignments via bimultiplicativity, use it
        for (size_t k2 = 0; k2 < k; ++k2) {
            auto [a, b] = pairs[k2];
            if (b != h) continue;
            // g = a * c with (c,h) already assigned?
            int c = G.mul[G.inv[a]][g];
            auto itc = cur.value.find({c, h});
            if (itc != cur.value.end() && commutes(a, h) && commutes(c, h)) {
                auto ita = cur.value.find({a, h});
                if (ita != cur.value.end()) {
                    cur.value[{g, h}] = ita->second * itc->second;
                    dfs(k + 1);
                    cur.value.erase({g, h});
                    return;
                }
            }
        }
        long d = std::gcd(G.order[g], G.order[h]);
        for (long v = 0; v < d; ++v) {
            cur.value[{g, h}] = Cyclotomic::root(d, v);
            // early audit of the symmetry identity when the partner is known
            auto it = cur.value.find({G.inv[h], g});
            if (it == cur.value.end() || it->second == cur.value[{g, h}]) dfs(k + 1);
            cur.value.erase({g, h});
        }
    };
    dfs(0);
    return out;
}

}  // namespace orbifrob
