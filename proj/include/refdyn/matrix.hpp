#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "refdyn/rational.hpp"
#include "refdyn/unipoly.hpp"

namespace refdyn {

/// Dense rectangular matrix of rationals, row-major.
class RatMatrix {
public:
    RatMatrix(int rows, int cols);
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] bool is_integral() const;

    Rational& operator()(int r, int c) { return a_[index(r, c)]; }
    const Rational& operator()(int r, int c) const { return a_[index(r, c)]; }

    [[nodiscard]] std::vector<Rational> row(int r) const;
    [[nodiscard]] std::vector<Rational> column(int c) const;
    [[nodiscard]] RatMatrix transpose() const;
    [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& v) const;
    [[nodiscard]] std::vector<Integer> apply(const std::vector<Integer>& v) const;
    [[nodiscard]] int rank() const;
    [[nodiscard]] Rational trace() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    [[nodiscard]] std::string to_string() const;
    /// Integer entries as nested vectors; throws on non-integral entries.
    [[nodiscard]] std::vector<std::vector<long>> to_int_rows() const;

private:
    [[nodiscard]] std::size_t index(int r, int c) const;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

RatMatrix pow(const RatMatrix& m, unsigned exponent);
/// Polynomial evaluated at a square matrix.
RatMatrix evaluate(const UniPoly& p, const RatMatrix& m);

/// det(xI - m), computed with the division-free Berkowitz recurrence.
UniPoly char_poly(const RatMatrix& m);
/// Monic polynomial of least degree annihilating m, obtained as the lcm of
/// the Krylov minimal polynomials of the standard basis vectors.
UniPoly minimal_poly(const RatMatrix& m);

/// Gaussian-elimination kernel over any field type providing +, -, *, /,
/// is_zero(). Returns a basis of {x : rows * x = 0}.
template <typename F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> rows, int ncols, const F& zero,
                                         const F& one) {
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i) {
            if (!rows[i][c].is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        const F inv = one / rows[r][c];
        for (int j = 0; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const F f = rows[i][c];
            for (int j = 0; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<F> v(static_cast<std::size_t>(ncols), zero);
        v[static_cast<std::size_t>(free)] = one;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) {
            v[static_cast<std::size_t>(pivot_col[k])] = zero - rows[k][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Kernel of a rational matrix.
std::vector<std::vector<Rational>> kernel(const RatMatrix& m);

}  // namespace refdyn
