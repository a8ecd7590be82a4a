#include "sap/subres.hpp"

namespace sap {

Poly bareiss_det(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw internal_error("bareiss_det: not square");
    if (n == 0) throw internal_error("bareiss_det: empty matrix");
    uint32_t nv = m[0][0].nvars();
    int sign = 1;
    Poly prev = Poly::constant(nv, Q(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly(nv);  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t.is_zero() ? t : exact_divide(t, prev);
            }
            m[i][k] = Poly(nv);
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

namespace {

// Rows of the matrix whose determinant (with the polynomial last
// column) yields S_j: deg(b)-j shifted copies of a over deg(a)-j
// shifted copies of b. Columns hold the coefficients of var^d for
// d = da+db-j-1 down to j+1; the last column holds the row polynomial
// truncated to degree <= j in var.
std::vector<std::vector<Poly>> subres_matrix(const Poly& a, const Poly& b,
                                             uint32_t var, unsigned j) {
    int da = a.degree_in(var), db = b.degree_in(var);
    uint32_t nv = a.nvars();
    size_t rows = static_cast<size_t>(da + db) - 2 * j;
    std::vector<std::vector<Poly>> m(rows, std::vector<Poly>(rows, Poly(nv)));
    Poly xv = Poly::variable(var, nv);
    auto fill_row = [&](size_t r, const Poly& p, unsigned shift) {
        Poly shifted = p * xv.pow(shift);
        auto cs = shifted.coeffs_wrt(var);
        int top = static_cast<int>(da + db) - static_cast<int>(j) - 1;
        for (size_t col = 0; col + 1 < rows; ++col) {
            int d = top - static_cast<int>(col);
            if (d >= 0 && d < static_cast<int>(cs.size())) m[r][col] = cs[d];
        }
        Poly tail(nv);
        for (int d = 0; d <= static_cast<int>(j) && d < static_cast<int>(cs.size()); ++d)
            tail += cs[static_cast<size_t>(d)] * xv.pow(static_cast<unsigned>(d));
        m[r][rows - 1] = tail;
    };
    size_t r = 0;
    for (int s = db - static_cast<int>(j) - 1; s >= 0; --s)
        fill_row(r++, a, static_cast<unsigned>(s));
    for (int s = da - static_cast<int>(j) - 1; s >= 0; --s)
        fill_row(r++, b, static_cast<unsigned>(s));
    return m;
}

}  // namespace

Poly resultant(const Poly& a, const Poly& b, uint32_t var) {
    if (a.is_zero() || b.is_zero()) return Poly(a.nvars());
    int da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0 && db == 0) return Poly::constant(a.nvars(), Q(1));
    if (da == 0) return a.pow(static_cast<unsigned>(db));
    if (db == 0) return b.pow(static_cast<unsigned>(da));
    return bareiss_det(subres_matrix(a, b, var, 0));
}

Poly subresultant(const Poly& a, const Poly& b, uint32_t var, unsigned j) {
    int da = a.degree_in(var), db = b.degree_in(var);
    if (da < 1 || db < 1 || static_cast<int>(j) >= std::min(da, db))
        throw internal_error("subresultant: index out of range");
    return bareiss_det(subres_matrix(a, b, var, j));
}

Poly psc(const Poly& a, const Poly& b, uint32_t var, unsigned j) {
    Poly s = subresultant(a, b, var, j);
    auto cs = s.coeffs_wrt(var);
    if (static_cast<size_t>(j) < cs.size()) return cs[j];
    return Poly(a.nvars());
}

}  // namespace sap
