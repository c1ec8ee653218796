#include "orbifrob/linalg.hpp"

namespace orbifrob {

CMat cmat_zero(size_t r, size_t c) { return CMat(r, CVec(c, Cyclotomic::zero())); }

CMat cmat_identity(size_t n) {
    CMat m = cmat_zero(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic::one();
    return m;
}

CMat cmat_mul(const CMat& a, const CMat& b) {
    size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    CMat out = cmat_zero(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < c; ++j)
                if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

CVec cmat_apply(const CMat& a, const CVec& v) {
    CVec out(a.size(), Cyclotomic::zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
    return out;
}

CMat cmat_add(const CMat& a, const CMat& b) {
    CMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

CMat cmat_scale(const CMat& a, const Cyclotomic& s) {
    CMat out = a;
    for (auto& row : out)
        for (auto& x : row) x = x * s;
    return out;
}

bool cmat_eq(const CMat& a, const CMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    }
    return true;
}

CMat cmat_transpose(const CMat& a) {
    if (a.empty()) return a;
    CMat out = cmat_zero(a[0].size(), a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    return out;
}

namespace {

// row echelon; returns pivot columns, determinant sign tracking optional
std::vector<size_t> echelon(CMat& m) {
    std::vector<size_t> pivots;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Cyclotomic inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Cyclotomic f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Cyclotomic cmat_det(CMat a) {
    size_t n = a.size();
    Cyclotomic det = Cyclotomic::one();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Cyclotomic::zero();
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det = det * a[c][c];
        Cyclotomic inv = a[c][c].inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            Cyclotomic f = a[i][c] * inv;
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

Cyclotomic cmat_trace(const CMat& a) {
    Cyclotomic t = Cyclotomic::zero();
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

size_t cmat_rank(CMat a) { return echelon(a).size(); }

CMat cmat_inverse(const CMat& a) {
    size_t n = a.size();
    CMat aug = cmat_zero(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = Cyclotomic::one();
    }
    auto piv = echelon(aug);
    if (piv.size() != n || piv.back() >= n) throw std::domain_error("matrix not invertible");
    CMat out = cmat_zero(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

std::vector<CVec> cmat_kernel(CMat a) {
    size_t cols = a.empty() ? 0 : a[0].size();
    auto piv = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<CVec> out;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        CVec v(cols, Cyclotomic::zero());
        v[f] = Cyclotomic::one();
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        out.push_back(v);
    }
    return out;
}

std::vector<CVec> cmat_column_space(const CMat& a) {
    CMat cp = a;
    auto piv = echelon(cp);
    std::vector<CVec> out;
    for (auto c : piv) {
        CVec col(a.size(), Cyclotomic::zero());
        for (size_t i = 0; i < a.size(); ++i) col[i] = a[i][c];
        out.push_back(col);
    }
    return out;
}

std::optional<CVec> cmat_solve(CMat a, CVec b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto piv = echelon(a);
    for (size_t r = 0; r < piv.size(); ++r)
        if (piv[r] == cols) return std::nullopt;  // pivot in the augmented column
    CVec x(cols, Cyclotomic::zero());
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
    return x;
}

}  // namespace orbifrob
