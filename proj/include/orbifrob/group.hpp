#pragma once

#include "orbifrob/linalg.hpp"

namespace orbifrob {

struct NotFinite : std::runtime_error {
    explicit NotFinite(const std::string& m) : std::runtime_error(m) {}
};
struct NotSubgroup : std::runtime_error {
    explicit NotSubgroup(const std::string& m) : std::runtime_error(m) {}
};
struct FieldTooSmall : std::runtime_error {
    explicit FieldTooSmall(const std::string& m) : std::runtime_error(m) {}
};

/// Finite matrix group with full multiplication/inverse/conjugation tables.
/// Elements are listed in breadth-first discovery order from the generators,
/// identity first; ordering is deterministic for a fixed generator list.
struct MatrixGroup {
    int n = 0;                       // ambient dimension
    std::vector<CMat> elems;
    std::vector<int> gens;           // indices of the generators
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    std::vector<std::vector<int>> conj;  // conj[h][g] = index of h g h^{-1}
    long exponent = 1;
    std::vector<long> order;         // element orders

    int size() const { return int(elems.size()); }
    int e() const { return 0; }
    bool is_abelian() const;
    bool is_cyclic() const;          // generated by a single element
    int cyclic_generator() const;    // an element of maximal order generating G (or -1)
    /// power of elems[g] as a group index
    int power(int g, long k) const;
    int commutator(int g, int h) const;  // g h g^{-1} h^{-1}
};

MatrixGroup generate_group(const std::vector<CMat>& gens, int bound = 4096);

/// Per-element spectral data in a simultaneously diagonalizing basis.
struct GroupElementData {
    std::vector<Rat> eigen_args;     // lambda_i(g)/2pi in [0,1), one per basis column
    std::vector<int> fixed;          // T_g: indices with eigenvalue 1
    std::vector<int> moved;          // N_g
    Cyclotomic det;
    CMat fix_basis;                  // n x |T_g|, columns span Fix_g
    CMat moved_basis;                // n x |N_g|
    CMat diag_basis;                 // n x n, columns = fix then moved eigenvectors
};

/// ambient_order: cyclotomic order the eigen data is computed in (must contain
/// the element's eigenvalues, i.e. order(g) | ambient_order).
GroupElementData element_data(const MatrixGroup& G, int g, long ambient_order);

/// determinant of g restricted to the moved space of h, via the paper's
/// convention det(g|_{N_h}) := det(g) / det(g|_{T_h}); for the restriction of g
/// to T_h we use the h-adapted basis (well defined whenever g preserves Fix_h,
/// and taken as the stated quotient otherwise).
Cyclotomic det_on_moved(const MatrixGroup& G, int g, int h, long ambient_order);

/// Parity choice: a homomorphism G -> Z/2 (the sign sigma of the paper).
struct ParityChoice {
    std::vector<int> value;  // 0/1 per element
    int operator()(int g) const { return value[g]; }
};

std::vector<ParityChoice> enumerate_parities(const MatrixGroup& G);

/// Discrete torsion: root-of-unity valued on commuting pairs with
/// eps(g,h) = eps(h^{-1},g), eps(g,g) = 1, eps(g1 g2,h) = eps(g1,h) eps(g2,h).
struct DiscreteTorsion {
    std::map<std::pair<int, int>, Cyclotomic> value;  // keys: commuting pairs only
    Cyclotomic operator()(int g, int h) const {
        auto it = value.find({g, h});
        return it == value.end() ? Cyclotomic::one() : it->second;
    }
};

/// all discrete torsions (practical bound |G| <= 64)
std::vector<DiscreteTorsion> enumerate_discrete_torsion(const MatrixGroup& G);

/// audit the three identities on every commuting pair/triple
bool check_discrete_torsion(const MatrixGroup& G, const DiscreteTorsion& eps);

}  // namespace orbifrob
