#include "sap/linalg.hpp"

#include <algorithm>

namespace sap {

namespace {

// x^-1 mod p for prime p, via the extended Euclid algorithm.
int64_t mod_inverse(int64_t x, int64_t p) {
    int64_t r0 = p, r1 = x % p;
    if (r1 < 0) r1 += p;
    if (r1 == 0) throw input_error("division by zero in the modular field");
    int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const int64_t q = r0 / r1;
        const int64_t r2 = r0 - q * r1;
        const int64_t s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw input_error("modulus is not prime");
    return ((s0 % p) + p) % p;
}

}  // namespace

Q Field::reduce(const Q& a) const {
    if (p == 0) return a;
    Z num = numerator(a) % p;
    if (num < 0) num += p;
    Z den = denominator(a) % p;
    const int64_t d = static_cast<int64_t>(den);
    const int64_t n = static_cast<int64_t>(num);
    if (d == 1) return Q(n);
    return Q((n * mod_inverse(d, p)) % p);
}

Q Field::div(const Q& a, const Q& b) const {
    if (p == 0) {
        if (b.is_zero()) throw input_error("division by zero");
        return a / b;
    }
    const Q br = reduce(b);
    if (br.is_zero()) throw input_error("division by zero in the modular field");
    const int64_t inv = mod_inverse(static_cast<int64_t>(numerator(br)), p);
    return reduce(a * Q(inv));
}

bool Field::is_zero(const Q& a) const { return reduce(a).is_zero(); }

Field make_field(int64_t p) {
    if (p == 0) return Field{0};
    if (p < 2) throw input_error("field modulus must be 0 or a prime");
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw input_error("field modulus must be 0 or a prime");
    return Field{p};
}

Mat identity_mat(size_t n) {
    Mat out(n, Vec(n, Q(0)));
    for (size_t i = 0; i < n; ++i) out[i][i] = Q(1);
    return out;
}

Vec mat_vec(const Field& F, const Mat& a, const Vec& x) {
    if (a.size() != x.size()) throw internal_error("mat_vec: shape mismatch");
    if (a.empty()) return {};
    Vec out(a[0].size(), Q(0));
    for (size_t j = 0; j < a.size(); ++j) {
        if (F.is_zero(x[j])) continue;
        for (size_t i = 0; i < out.size(); ++i)
            out[i] = F.add(out[i], F.mul(a[j][i], x[j]));
    }
    return out;
}

Mat mat_mul(const Field& F, const Mat& a, const Mat& b) {
    Mat out;
    out.reserve(b.size());
    for (const Vec& col : b) out.push_back(mat_vec(F, a, col));
    return out;
}

namespace {

// Reduces v against the echelon columns (pivot row -> column), then
// normalizes and registers it if nonzero in the watched prefix.
// Returns the pivot row or npos.
size_t sweep_in(const Field& F, std::vector<std::pair<size_t, Vec>>& ech, Vec& v,
                size_t watch) {
    for (const auto& [pr, pc] : ech) {
        const Q c = F.reduce(v[pr]);
        if (c.is_zero()) continue;
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = F.sub(v[i], F.mul(c, pc[i]));
    }
    size_t piv = static_cast<size_t>(-1);
    for (size_t i = 0; i < watch; ++i) {
        if (!F.is_zero(v[i])) {
            piv = i;
            break;
        }
    }
    if (piv == static_cast<size_t>(-1)) return piv;
    const Q lead = F.reduce(v[piv]);
    for (size_t i = 0; i < v.size(); ++i) v[i] = F.div(v[i], lead);
    for (auto& [pr, pc] : ech) {
        const Q c = F.reduce(pc[piv]);
        if (c.is_zero()) continue;
        for (size_t i = 0; i < v.size(); ++i)
            pc[i] = F.sub(pc[i], F.mul(c, v[i]));
    }
    ech.push_back({piv, v});
    return piv;
}

Mat finish_echelon(std::vector<std::pair<size_t, Vec>>& ech) {
    std::sort(ech.begin(), ech.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Mat out;
    out.reserve(ech.size());
    for (auto& [pr, pc] : ech) out.push_back(std::move(pc));
    return out;
}

}  // namespace

Mat column_echelon(const Field& F, const Mat& a) {
    std::vector<std::pair<size_t, Vec>> ech;
    for (const Vec& col : a) {
        Vec v = col;
        sweep_in(F, ech, v, v.size());
    }
    return finish_echelon(ech);
}

size_t mat_rank(const Field& F, const Mat& a) {
    return column_echelon(F, a).size();
}

Mat kernel_basis(const Field& F, const Mat& a) {
    const size_t m = a.size();
    const size_t rows = m == 0 ? 0 : a[0].size();
    std::vector<std::pair<size_t, Vec>> ech;
    Mat kernels;
    for (size_t j = 0; j < m; ++j) {
        Vec v(rows + m, Q(0));
        std::copy(a[j].begin(), a[j].end(), v.begin());
        v[rows + j] = Q(1);
        const size_t piv = sweep_in(F, ech, v, rows);
        if (piv == static_cast<size_t>(-1))
            kernels.push_back(Vec(v.begin() + static_cast<long>(rows), v.end()));
    }
    return column_echelon(F, kernels);
}

std::optional<Vec> solve(const Field& F, const Mat& a, const Vec& b) {
    const size_t m = a.size();
    const size_t n = b.size();
    for (const Vec& col : a)
        if (col.size() != n) throw internal_error("solve: shape mismatch");
    // Gauss-Jordan on rows of [a | b]
    Mat rows(n, Vec(m + 1, Q(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) rows[i][j] = F.reduce(a[j][i]);
        rows[i][m] = F.reduce(b[i]);
    }
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, column)
    size_t r = 0;
    for (size_t c = 0; c < m && r < n; ++c) {
        size_t sel = static_cast<size_t>(-1);
        for (size_t i = r; i < n; ++i) {
            if (!F.is_zero(rows[i][c])) {
                sel = i;
                break;
            }
        }
        if (sel == static_cast<size_t>(-1)) continue;
        std::swap(rows[r], rows[sel]);
        const Q lead = rows[r][c];
        for (Q& e : rows[r]) e = F.div(e, lead);
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            const Q f = F.reduce(rows[i][c]);
            if (f.is_zero()) continue;
            for (size_t j = c; j <= m; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivots.push_back({r, c});
        ++r;
    }
    for (size_t i = r; i < n; ++i)
        if (!F.is_zero(rows[i][m])) return std::nullopt;
    Vec x(m, Q(0));
    for (const auto& [pr, pc] : pivots) x[pc] = rows[pr][m];
    return x;
}

std::optional<Mat> mat_inverse(const Field& F, const Mat& a) {
    const size_t n = a.size();
    for (const Vec& col : a)
        if (col.size() != n) throw internal_error("mat_inverse: not square");
    // Gauss-Jordan on rows of [a | I]
    Mat rows(n, Vec(2 * n, Q(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) rows[i][j] = F.reduce(a[j][i]);
        rows[i][n + i] = Q(1);
    }
    size_t r = 0;
    for (size_t c = 0; c < n && r < n; ++c) {
        size_t sel = static_cast<size_t>(-1);
        for (size_t i = r; i < n; ++i) {
            if (!F.is_zero(rows[i][c])) {
                sel = i;
                break;
            }
        }
        if (sel == static_cast<size_t>(-1)) return std::nullopt;
        std::swap(rows[r], rows[sel]);
        const Q lead = rows[r][c];
        for (Q& e : rows[r]) e = F.div(e, lead);
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            const Q f = F.reduce(rows[i][c]);
            if (f.is_zero()) continue;
            for (size_t j = 0; j < 2 * n; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        ++r;
    }
    if (r < n) return std::nullopt;
    Mat inv(n, Vec(n, Q(0)));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) inv[j][i] = rows[i][n + j];
    return inv;
}

}  // namespace sap
