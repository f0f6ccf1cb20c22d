// Exact integer / rational linear algebra on small dense matrices.
// Everything here works over Z or Q; no floating point.

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oneadm {

using i64 = long long;
using Rat = boost::rational<i64>;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  // row-major
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline i64 dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    i64 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(i64 c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec negate(const Vec& a) { return scale(-1, a); }

inline bool is_zero(const Vec& a) {
    for (i64 x : a)
        if (x != 0) return false;
    return true;
}

inline Mat identity_mat(int n) {
    Mat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat r(n, Vec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j)
            if (a[i][j] != 0)
                for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
    return r;
}

inline Vec mat_apply(const Mat& a, const Vec& x) {
    Vec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

inline Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat r(a[0].size(), Vec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

// Solve A x = b over Q. A is m x n.  Returns a particular solution, or
// nullopt when the system is inconsistent.  If the solution space is
// positive-dimensional the free variables are set to zero.
inline std::optional<RatVec> solve_rational(const Mat& a, const Vec& b) {
    size_t m = a.size(), n = m ? a[0].size() : 0;
    RatMat aug(m, RatVec(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = Rat(a[i][j]);
        aug[i][n] = Rat(b[i]);
    }
    std::vector<int> pivot_col(m, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && aug[p][col] == Rat(0)) ++p;
        if (p == m) continue;
        std::swap(aug[p], aug[row]);
        Rat inv = aug[row][col];
        for (size_t j = col; j <= n; ++j) aug[row][j] /= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || aug[i][col] == Rat(0)) continue;
            Rat f = aug[i][col];
            for (size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (aug[i][n] != Rat(0)) return std::nullopt;
    RatVec x(n, Rat(0));
    for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = aug[i][n];
    return x;
}

inline std::optional<Vec> to_integer(const RatVec& x) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].denominator() != 1) return std::nullopt;
        r[i] = x[i].numerator();
    }
    return r;
}

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal,
// divisibility d1 | d2 | ... .  A is m x n.
struct SmithForm {
    Mat u, d, v;  // u: m x m, d: m x n, v: n x n
    std::vector<i64> invariant_factors;  // nonzero diagonal entries, then nothing
    int rank = 0;
};

inline SmithForm smith_form(Mat a) {
    size_t m = a.size(), n = m ? a[0].size() : 0;
    Mat u = identity_mat(static_cast<int>(m));
    Mat v = identity_mat(static_cast<int>(n));
    size_t t = 0;
    auto swap_rows = [&](size_t i, size_t j) { std::swap(a[i], a[j]); std::swap(u[i], u[j]); };
    auto swap_cols = [&](size_t i, size_t j) {
        for (size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (size_t r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
    };
    auto add_row = [&](size_t dst, size_t src, i64 c) {
        for (size_t j = 0; j < n; ++j) a[dst][j] += c * a[src][j];
        for (size_t j = 0; j < m; ++j) u[dst][j] += c * u[src][j];
    };
    auto add_col = [&](size_t dst, size_t src, i64 c) {
        for (size_t r = 0; r < m; ++r) a[r][dst] += c * a[r][src];
        for (size_t r = 0; r < n; ++r) v[r][dst] += c * v[r][src];
    };
    while (t < m && t < n) {
        // pick nonzero pivot of minimal absolute value
        size_t pi = t, pj = t;
        i64 best = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
                    best = std::abs(a[i][j]);
                    pi = i; pj = j;
                }
        if (best == 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        for (size_t i = t + 1; i < m; ++i)
            if (a[i][t] != 0) { add_row(i, t, -(a[i][t] / a[t][t])); if (a[i][t] != 0) clean = false; }
        for (size_t j = t + 1; j < n; ++j)
            if (a[t][j] != 0) { add_col(j, t, -(a[t][j] / a[t][t])); if (a[t][j] != 0) clean = false; }
        if (!clean) continue;  // remainders left, redo with smaller pivot
        // enforce divisibility d_t | a[i][j]
        bool bad = false;
        for (size_t i = t + 1; i < m && !bad; ++i)
            for (size_t j = t + 1; j < n && !bad; ++j)
                if (a[i][j] % a[t][t] != 0) { add_row(t, i, 1); bad = true; }
        if (bad) continue;
        if (a[t][t] < 0) add_row(t, t, -2);  // negates the row
        ++t;
    }
    SmithForm s;
    s.u = std::move(u);
    s.v = std::move(v);
    s.d = std::move(a);
    for (size_t i = 0; i < t; ++i)
        if (s.d[i][i] != 0) s.invariant_factors.push_back(s.d[i][i]);
    s.rank = static_cast<int>(s.invariant_factors.size());
    return s;
}

// Column-style Hermite normal form of the lattice spanned by the columns
// of A (m x n).  Returns a matrix whose columns are a basis of that
// lattice (m x rank), in lower-triangular echelon shape.
inline Mat hnf_column_basis(const Mat& a) {
    size_t m = a.size(), n = m ? a[0].size() : 0;
    // work on columns: cols[j] is the j-th generator
    std::vector<Vec> cols(n, Vec(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) cols[j][i] = a[i][j];
    size_t col = 0;
    for (size_t row = 0; row < m && col < cols.size(); ++row) {
        // gcd-reduce entries in this row across columns col..end
        while (true) {
            size_t p = cols.size();
            i64 best = 0;
            for (size_t j = col; j < cols.size(); ++j)
                if (cols[j][row] != 0 && (best == 0 || std::abs(cols[j][row]) < best)) {
                    best = std::abs(cols[j][row]);
                    p = j;
                }
            if (p == cols.size()) break;  // row is all zero
            std::swap(cols[col], cols[p]);
            bool done = true;
            for (size_t j = col + 1; j < cols.size(); ++j)
                if (cols[j][row] != 0) {
                    i64 q = cols[j][row] / cols[col][row];
                    for (size_t i = 0; i < m; ++i) cols[j][i] -= q * cols[col][i];
                    if (cols[j][row] != 0) done = false;
                }
            if (done) break;
        }
        if (cols[col][row] != 0) {
            if (cols[col][row] < 0)
                for (size_t i = 0; i < m; ++i) cols[col][i] = -cols[col][i];
            // reduce earlier columns against this pivot
            for (size_t j = 0; j < col; ++j) {
                i64 q = cols[j][row] >= 0 ? cols[j][row] / cols[col][row]
                                          : -((-cols[j][row] + cols[col][row] - 1) / cols[col][row]);
                if (q != 0)
                    for (size_t i = 0; i < m; ++i) cols[j][i] -= q * cols[col][i];
            }
            ++col;
        }
    }
    cols.resize(col);
    Mat basis(m, Vec(col, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < col; ++j) basis[i][j] = cols[j][i];
    return basis;
}

// Integer kernel of A (m x n): basis of { x in Z^n : A x = 0 }, columns.
inline Mat integer_kernel(const Mat& a) {
    size_t n = a.empty() ? 0 : a[0].size();
    SmithForm s = smith_form(a);
    // A = U^-1 D V^-1, so A x = 0 iff D (V^-1 x) = 0; kernel basis = columns
    // of V beyond the rank.
    size_t r = s.rank;
    Mat ker(n, Vec(n - r));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = r; j < n; ++j) ker[i][j - r] = s.v[i][j];
    return ker;
}

// Does b lie in the Z-span of the columns of A?
inline bool in_column_span_z(const Mat& a, const Vec& b) {
    auto x = solve_rational(a, b);
    if (!x) return false;
    // particular rational solution with free vars zero does not certify
    // integrality by itself; reduce b against an HNF basis instead.
    Mat basis = hnf_column_basis(a);
    size_t m = a.size();
    Vec r = b;
    size_t col = 0;
    for (size_t row = 0; row < m && col < (basis.empty() ? 0 : basis[0].size()); ++row) {
        if (basis[row][col] == 0) continue;
        if (r[row] % basis[row][col] != 0) return false;
        i64 q = r[row] / basis[row][col];
        for (size_t i = 0; i < m; ++i) r[i] -= q * basis[i][col];
        ++col;
    }
    return is_zero(r);
}

inline Rat det_rational(RatMat a) {
    size_t n = a.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && a[p][col] == Rat(0)) ++p;
        if (p == n) return Rat(0);
        if (p != col) { std::swap(a[p], a[col]); det = -det; }
        det *= a[col][col];
        Rat inv = a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] /= inv;
        for (size_t i = col + 1; i < n; ++i) {
            Rat f = a[i][col];
            if (f == Rat(0)) continue;
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

inline i64 det_integer(const Mat& a) {
    RatMat ra(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (i64 x : a[i]) ra[i].push_back(Rat(x));
    Rat d = det_rational(std::move(ra));
    if (d.denominator() != 1) throw std::logic_error("det_integer: non-integral determinant");
    return d.numerator();
}

}  // namespace oneadm
