#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orbifrob/rational.hpp"

namespace orbifrob {

struct NotRootOfUnity : std::runtime_error {
    explicit NotRootOfUnity(const std::string& m) : std::runtime_error(m) {}
};
struct BranchAmbiguity : std::runtime_error {
    explicit BranchAmbiguity(const std::string& m) : std::runtime_error(m) {}
};

/// Exact element of Q(zeta_M), stored in the power basis 1, z, ..., z^{phi(M)-1}
/// modulo the M-th cyclotomic polynomial. Arithmetic between different orders
/// promotes both operands to Q(zeta_lcm).
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), c_(1, Rat(0)) {}

    static Cyclotomic zero(long order = 1);
    static Cyclotomic one(long order = 1);
    static Cyclotomic from_rat(const Rat& r, long order = 1);
    /// zeta_M^k
    static Cyclotomic root(long order, long k);
    /// w(a) = exp(2*pi*i*a); the denominator of a (mod 1) sets the order
    static Cyclotomic root_frac(const Rat& a);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// rational part if the element lies in Q
    std::optional<Rat> as_rat() const;

    Cyclotomic promoted(long new_order) const;  // requires order | new_order

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic inverse() const;  // throws std::domain_error on zero
    Cyclotomic pow(long e) const;

    /// Galois automorphism zeta -> zeta^k, gcd(k, M) = 1
    Cyclotomic galois(long k) const;
    /// complex conjugation zeta -> zeta^{-1}
    Cyclotomic conj() const { return galois(order_ - 1 <= 0 ? 1 : order_ - 1); }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// If this is a root of unity, return its argument a in [0,1) with *this == w(a).
    std::optional<Rat> as_root_of_unity() const;

    std::string str() const;

  private:
    Cyclotomic(long order, std::vector<Rat> c) : order_(order), c_(std::move(c)) {}
    long order_;
    std::vector<Rat> c_;

    friend class CycContext;
};

inline Cyclotomic operator*(const Rat& r, const Cyclotomic& c) {
    return Cyclotomic::from_rat(r, c.order()) * c;
}

/// Principal square root of a root of unity: w(a) -> w(a/2) for a in [0,1),
/// a != 1/2. For c == -1 the branch is genuinely ambiguous (paper's +-i rule
/// applies to the g/g^{-1} pair) and BranchAmbiguity is thrown.
Cyclotomic sqrt_unit(const Cyclotomic& c);

/// Same but resolving c == -1 to +i (the "first of the pair" branch).
Cyclotomic sqrt_unit_pair_first(const Cyclotomic& c);

long euler_phi(long n);

}  // namespace orbifrob
