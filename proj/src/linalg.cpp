#include "torcur/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace torcur {

namespace {

// Gauss-Jordan over exact rationals; returns false if singular.
bool invert_rational(const IntMat& m, std::vector<std::vector<Rat>>& out) {
    const size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        a[i][n + i] = Rat(1);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        Rat inv = Rat(1) / a[col][col];
        for (size_t j = 0; j < 2 * n; ++j) a[col][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    out.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return true;
}

}  // namespace

Int det(const IntMat& m) {
    // Bareiss fraction-free elimination.
    const size_t n = m.size();
    if (n == 0) return Int(1);
    IntMat a = m;
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return Int(0);
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev);
            a[i][k] = Int(0);
        }
        prev = a[k][k];
    }
    return sign == 1 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

IntMat inverse_unimodular(const IntMat& m) {
    Int d = det(m);
    if (!(d == Int(1) || d == Int(-1)))
        throw std::domain_error("matrix is not unimodular (det " + d.str() + ")");
    std::vector<std::vector<Rat>> inv;
    if (!invert_rational(m, inv)) throw std::domain_error("singular matrix");
    const size_t n = m.size();
    IntMat out(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (!inv[i][j].is_integer()) throw std::domain_error("non-integral inverse entry");
            out[i][j] = inv[i][j].num();
        }
    }
    return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
    IntMat c(n, std::vector<Int>(p, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t)
            for (size_t j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
    return c;
}

std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& v) {
    std::vector<Int> out(a.size(), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

}  // namespace torcur
