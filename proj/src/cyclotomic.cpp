#include "orbifrob/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace orbifrob {

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// dense univariate polynomial over Q, coefficient of x^i at index i
using UPoly = std::vector<Rat>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

// division with remainder, b monic-normalizable
void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    r = a;
    utrim(r);
    q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, Rat(0));
    while (r.size() >= b.size() && !r.empty()) {
        Rat coef = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = coef;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= coef * b[i];
        utrim(r);
    }
    utrim(q);
}

// x^n - 1
UPoly xn_minus_1(long n) {
    UPoly p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

}  // namespace

/// Per-order context: the cyclotomic polynomial and reduction data for Q(zeta_M).
class CycContext {
  public:
    long M;
    long phi;
    UPoly cyclo;                     // Phi_M, monic, degree phi
    std::vector<std::vector<Rat>> pow_red;  // x^k reduced, k in [0, 2*phi-1)

    static const CycContext& get(long M) {
        static std::map<long, CycContext> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(M);
        if (it != cache.end()) return it->second;
        CycContext ctx;
        ctx.M = M;
        ctx.cyclo = cyclotomic_poly(M, cache);
        ctx.phi = long(ctx.cyclo.size()) - 1;
        long top = std::max<long>(2 * ctx.phi - 1, M + 1);
        ctx.pow_red.resize(top);
        for (long k = 0; k < top; ++k) {
            if (k < ctx.phi) {
                ctx.pow_red[k].assign(ctx.phi, Rat(0));
                ctx.pow_red[k][k] = 1;
            } else {
                // x^k = x * x^{k-1}
                std::vector<Rat> prev = ctx.pow_red[k - 1];
                std::vector<Rat> cur(ctx.phi, Rat(0));
                for (long i = 0; i + 1 < ctx.phi; ++i) cur[i + 1] = prev[i];
                Rat lead = prev[ctx.phi - 1];
                if (lead != 0)
                    for (long i = 0; i < ctx.phi; ++i) cur[i] -= lead * ctx.cyclo[i];
                ctx.pow_red[k] = std::move(cur);
            }
        }
        return cache.emplace(M, std::move(ctx)).first->second;
    }

  private:
    static UPoly cyclotomic_poly(long n, std::map<long, CycContext>& cache) {
        // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
        UPoly num = xn_minus_1(n);
        for (long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            UPoly phid;
            auto it = cache.find(d);
            if (it != cache.end())
                phid = it->second.cyclo;
            else
                phid = cyclotomic_poly(d, cache);
            UPoly q, r;
            udivmod(num, phid, q, r);
            num = q;
        }
        return num;
    }
};

Cyclotomic Cyclotomic::zero(long order) {
    const auto& ctx = CycContext::get(order);
    return Cyclotomic(order, std::vector<Rat>(ctx.phi, Rat(0)));
}

Cyclotomic Cyclotomic::one(long order) {
    Cyclotomic z = zero(order);
    z.c_[0] = 1;
    return z;
}

Cyclotomic Cyclotomic::from_rat(const Rat& r, long order) {
    Cyclotomic z = zero(order);
    z.c_[0] = r;
    return z;
}

Cyclotomic Cyclotomic::root(long order, long k) {
    const auto& ctx = CycContext::get(order);
    k %= order;
    if (k < 0) k += order;
    Cyclotomic z = zero(order);
    z.c_ = ctx.pow_red[k];
    return z;
}

Cyclotomic Cyclotomic::root_frac(const Rat& a) {
    Rat m = mod1(a);
    long den = rat_den(m);
    long num = rat_num(m);
    return root(den, num);
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<Rat> Cyclotomic::as_rat() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

Cyclotomic Cyclotomic::promoted(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) throw std::invalid_argument("promotion requires order | new_order");
    const auto& ctx = CycContext::get(new_order);
    long stride = new_order / order_;
    Cyclotomic out = zero(new_order);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& row = ctx.pow_red[long(j) * stride];
        for (long i = 0; i < ctx.phi; ++i) out.c_[i] += c_[j] * row[i];
    }
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long m = std::lcm(order_, o.order_);
    Cyclotomic a = promoted(m), b = o.promoted(m);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long m = std::lcm(order_, o.order_);
    Cyclotomic a = promoted(m), b = o.promoted(m);
    const auto& ctx = CycContext::get(m);
    std::vector<Rat> prod(2 * ctx.phi - 1, Rat(0));
    for (long i = 0; i < ctx.phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < ctx.phi; ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    Cyclotomic out = zero(m);
    for (long k = 0; k < long(prod.size()); ++k) {
        if (prod[k] == 0) continue;
        const auto& row = ctx.pow_red[k];
        for (long i = 0; i < ctx.phi; ++i) out.c_[i] += prod[k] * row[i];
    }
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero cyclotomic");
    const auto& ctx = CycContext::get(order_);
    // extended euclid over Q[x]: u * this + v * Phi_M = 1
    UPoly a(c_.begin(), c_.end());
    utrim(a);
    UPoly b = ctx.cyclo;
    UPoly u0 = {Rat(1)}, u1 = {};
    UPoly r0 = a, r1 = b;
    while (!r1.empty()) {
        UPoly q, r;
        udivmod(r0, r1, q, r);
        UPoly u2_sub = umul(q, u1);
        UPoly u2 = u0;
        if (u2.size() < u2_sub.size()) u2.resize(u2_sub.size(), Rat(0));
        for (size_t i = 0; i < u2_sub.size(); ++i) u2[i] -= u2_sub[i];
        utrim(u2);
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
    }
    // r0 = gcd, a nonzero constant (Phi_M irreducible over Q)
    if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not constant");
    Rat g = r0[0];
    Cyclotomic out = zero(order_);
    for (size_t i = 0; i < u0.size() && i < out.c_.size(); ++i) out.c_[i] = u0[i] / g;
    return out;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
    long m = std::lcm(order_, o.order_);
    return promoted(m) * o.promoted(m).inverse();
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r = one(order_);
    Cyclotomic b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Cyclotomic Cyclotomic::galois(long k) const {
    k %= order_;
    if (k < 0) k += order_;
    if (order_ == 1) return *this;
    if (std::gcd(k, order_) != 1) throw std::invalid_argument("galois exponent not coprime to order");
    const auto& ctx = CycContext::get(order_);
    Cyclotomic out = zero(order_);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& row = ctx.pow_red[(long(j) * k) % order_];
        for (long i = 0; i < ctx.phi; ++i) out.c_[i] += c_[j] * row[i];
    }
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    long m = std::lcm(order_, o.order_);
    Cyclotomic a = promoted(m), b = o.promoted(m);
    return a.c_ == b.c_;
}

std::optional<Rat> Cyclotomic::as_root_of_unity() const {
    // roots of unity contained in Q(zeta_M) are +- zeta_M^k
    for (long k = 0; k < order_; ++k) {
        Cyclotomic r = root(order_, k);
        if (*this == r) return Rat(k, order_ == 0 ? 1 : order_);
        if (*this == -r) return mod1(Rat(k, order_) + Rat(1, 2));
    }
    return std::nullopt;
}

std::string Cyclotomic::str() const {
    if (auto a = as_root_of_unity()) {
        if (*a == 0) return "1";
        if (*a == Rat(1, 2)) return "-1";
        std::ostringstream os;
        os << "w(" << a->get_str() << ")";
        return os.str();
    }
    if (auto r = as_rat()) return r->get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i > 0) os << "*z" << order_ << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

Cyclotomic sqrt_unit(const Cyclotomic& c) {
    auto a = c.as_root_of_unity();
    if (!a) throw NotRootOfUnity("sqrt_unit: not a root of unity: " + c.str());
    if (*a == Rat(1, 2))
        throw BranchAmbiguity("sqrt_unit(-1): branch requires the g/g^{-1} +-i convention");
    return Cyclotomic::root_frac(*a / 2);
}

Cyclotomic sqrt_unit_pair_first(const Cyclotomic& c) {
    auto a = c.as_root_of_unity();
    if (!a) throw NotRootOfUnity("sqrt_unit: not a root of unity: " + c.str());
    return Cyclotomic::root_frac(*a / 2);
}

}  // namespace orbifrob
