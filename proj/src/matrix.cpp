#include "refdyn/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace refdyn {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw Error("matrix dimensions must be positive");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : RatMatrix(static_cast<int>(rows.size()), rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw Error("ragged matrix literal");
        int c = 0;
        for (long v : row) (*this)(r, c++) = Rational(v);
        ++r;
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error("matrix dimensions must be positive");
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.cols_) throw Error("ragged matrix");
        for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

std::size_t RatMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

bool RatMatrix::is_integral() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_integer(); });
}

std::vector<Rational> RatMatrix::row(int r) const {
    std::vector<Rational> v;
    for (int c = 0; c < cols_; ++c) v.push_back((*this)(r, c));
    return v;
}

std::vector<Rational> RatMatrix::column(int c) const {
    std::vector<Rational> v;
    for (int r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("vector length does not match matrix");
    std::vector<Rational> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
    }
    return out;
}

std::vector<Integer> RatMatrix::apply(const std::vector<Integer>& v) const {
    if (!is_integral()) throw Error("integer application needs an integral matrix");
    if (static_cast<int>(v.size()) != cols_) throw Error("vector length does not match matrix");
    std::vector<Integer> out(static_cast<std::size_t>(rows_), Integer(0));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            const Rational& e = (*this)(r, c);
            if (e.is_zero()) continue;
            out[static_cast<std::size_t>(r)] += e.num() * v[static_cast<std::size_t>(c)];
        }
    }
    return out;
}

int RatMatrix::rank() const {
    std::vector<std::vector<Rational>> rows;
    for (int r = 0; r < rows_; ++r) rows.push_back(row(r));
    return cols_ - static_cast<int>(kernel_basis(rows, cols_, Rational(0), Rational(1)).size());
}

Rational RatMatrix::trace() const {
    Rational t(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
        }
    }
    return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum dimension mismatch");
    RatMatrix out = a;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += b.a_[k];
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + Rational(-1) * b; }

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix out = a;
    for (auto& x : out.a_) x *= s;
    return out;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<std::vector<long>> RatMatrix::to_int_rows() const {
    std::vector<std::vector<long>> out;
    for (int r = 0; r < rows_; ++r) {
        std::vector<long> row_values;
        for (int c = 0; c < cols_; ++c) {
            const Rational& x = (*this)(r, c);
            if (!x.is_integer()) throw Error("matrix entry is not an integer");
            row_values.push_back(to_int64(x.num()));
        }
        out.push_back(std::move(row_values));
    }
    return out;
}

RatMatrix pow(const RatMatrix& m, unsigned exponent) {
    if (!m.is_square()) throw Error("matrix power needs a square matrix");
    RatMatrix result = RatMatrix::identity(m.rows());
    RatMatrix base = m;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

RatMatrix evaluate(const UniPoly& p, const RatMatrix& m) {
    if (!m.is_square()) throw Error("polynomial evaluation needs a square matrix");
    RatMatrix acc(m.rows(), m.cols());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m + p.coeff(k) * RatMatrix::identity(m.rows());
    }
    return acc;
}

UniPoly char_poly(const RatMatrix& m) {
    if (!m.is_square()) throw Error("characteristic polynomial needs a square matrix");
    const int n = m.rows();
    // Berkowitz: the coefficient vector is built from Toeplitz products of
    // the leading principal submatrices, with no divisions.
    std::vector<Rational> c{Rational(1), -m(0, 0)};  // descending powers
    for (int k = 1; k < n; ++k) {
        // Partition the leading (k+1)x(k+1) block as [[A, R], [S, a]].
        const Rational a = m(k, k);
        std::vector<Rational> rrow(static_cast<std::size_t>(k));
        std::vector<Rational> scol(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            rrow[static_cast<std::size_t>(j)] = m(k, j);
            scol[static_cast<std::size_t>(j)] = m(j, k);
        }
        // q_0 = 1, q_1 = -a, q_{i+2} = -R A^i S.
        std::vector<Rational> q(static_cast<std::size_t>(k) + 2);
        q[0] = Rational(1);
        q[1] = -a;
        std::vector<Rational> v = scol;
        for (int i = 0; i < k; ++i) {
            Rational dot(0);
            for (int j = 0; j < k; ++j) dot += rrow[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
            q[static_cast<std::size_t>(i) + 2] = -dot;
            std::vector<Rational> next(static_cast<std::size_t>(k));
            for (int r = 0; r < k; ++r) {
                for (int j = 0; j < k; ++j) next[static_cast<std::size_t>(r)] += m(r, j) * v[static_cast<std::size_t>(j)];
            }
            v = std::move(next);
        }
        // New coefficients: Toeplitz(q) * c.
        std::vector<Rational> nc(static_cast<std::size_t>(k) + 2);
        for (std::size_t i = 0; i < nc.size(); ++i) {
            for (std::size_t j = 0; j < c.size() && j <= i; ++j) nc[i] += q[i - j] * c[j];
        }
        c = std::move(nc);
    }
    std::reverse(c.begin(), c.end());
    return UniPoly(std::move(c));
}

namespace {

// Monic minimal polynomial of the Krylov sequence v, Mv, M^2 v, ...
UniPoly krylov_minimal(const RatMatrix& m, const std::vector<Rational>& v) {
    const int n = m.rows();
    std::vector<std::vector<Rational>> seq{v};
    for (;;) {
        // Find a dependency among the vectors collected so far.
        const int k = static_cast<int>(seq.size());
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(k)));
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = seq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
        auto ker = kernel_basis(rows, k, Rational(0), Rational(1));
        if (!ker.empty()) {
            // The first dependency involves the newest vector with a nonzero coefficient.
            return UniPoly(ker.front()).monic();
        }
        if (k > n) throw Error("Krylov sequence failed to become dependent");
        seq.push_back(m.apply(seq.back()));
    }
}

}  // namespace

UniPoly minimal_poly(const RatMatrix& m) {
    if (!m.is_square()) throw Error("minimal polynomial needs a square matrix");
    const int n = m.rows();
    UniPoly result = UniPoly::constant(Rational(1));
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(i)] = Rational(1);
        result = lcm(result, krylov_minimal(m, e));
    }
    return result.monic();
}

std::vector<std::vector<Rational>> kernel(const RatMatrix& m) {
    std::vector<std::vector<Rational>> rows;
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return kernel_basis(rows, m.cols(), Rational(0), Rational(1));
}

}  // namespace refdyn
