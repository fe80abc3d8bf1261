#include "kslope/linsolve.hpp"

#include "kslope/errors.hpp"

namespace kslope {

std::vector<Rational> solve_negdef(const Matrix& m, const std::vector<Rational>& b) {
    const std::size_t n = m.size();
    if (n == 0) fail(errc::precondition, "empty system");
    if (b.size() != n) fail(errc::precondition, "right-hand side size mismatch");
    for (const auto& row : m)
        if (row.size() != n) fail(errc::precondition, "matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(m[i][j] == m[j][i])) fail(errc::precondition, "matrix is not symmetric");

    // Unpivoted elimination. For a symmetric matrix the pivots are the ratios
    // of consecutive leading principal minors, so the matrix is negative
    // definite exactly when every pivot is negative; a zero pivot means a
    // vanishing leading minor.
    Matrix a = m;
    std::vector<Rational> rhs = b;
    for (std::size_t k = 0; k < n; ++k) {
        const Rational& pivot = a[k][k];
        if (pivot.is_zero()) fail(errc::singular_system, "vanishing leading principal minor");
        if (pivot.sign() > 0) fail(errc::not_negative_definite, "positive elimination pivot");
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational factor = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
            rhs[i] -= factor * rhs[k];
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational acc = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a[k][j] * x[j];
        x[k] = acc / a[k][k];
    }
    return x;
}

} // namespace kslope
