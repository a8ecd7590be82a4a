#ifndef SAP_LINALG_HPP
#define SAP_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sap/numbers.hpp"

namespace sap {

// Coefficient field: a prime modulus, or 0 for the rationals. Elements
// travel as exact rationals; modular values are kept reduced to
// integers in [0, p).
struct Field {
    int64_t p = 2;

    bool rational() const { return p == 0; }
    Q reduce(const Q& a) const;
    Q add(const Q& a, const Q& b) const { return reduce(a + b); }
    Q sub(const Q& a, const Q& b) const { return reduce(a - b); }
    Q mul(const Q& a, const Q& b) const { return reduce(a * b); }
    Q neg(const Q& a) const { return reduce(-a); }
    Q div(const Q& a, const Q& b) const;
    bool is_zero(const Q& a) const;
};

// Validates the modulus (0 or a prime).
Field make_field(int64_t p);

// Column-major exact matrices: a Mat is its list of columns, and all
// columns of one matrix share a length. A matrix with no columns has
// lost its row count, which every consumer here tolerates.
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;

Mat identity_mat(size_t n);
Vec mat_vec(const Field& F, const Mat& a, const Vec& x);
Mat mat_mul(const Field& F, const Mat& a, const Mat& b);

// Canonical reduced column echelon basis of the column span: pivot
// rows strictly increase, pivot entries are 1 and are the only nonzero
// entries in their row. Zero columns are dropped.
Mat column_echelon(const Field& F, const Mat& a);

size_t mat_rank(const Field& F, const Mat& a);

// Canonical basis of the nullspace of a (vectors of length a.size()).
Mat kernel_basis(const Field& F, const Mat& a);

// One solution of A x = b with free coordinates set to zero.
std::optional<Vec> solve(const Field& F, const Mat& a, const Vec& b);

std::optional<Mat> mat_inverse(const Field& F, const Mat& a);

}  // namespace sap

#endif
