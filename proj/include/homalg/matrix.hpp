#pragma once

// Dense exact matrices over a field plus the subspace toolkit (kernels,
// preimages, intersections, canonical quotients) used throughout.

#include "homalg/field.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace homalg {

template <class K>
class Matrix {
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> a_;

  public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const K& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend Matrix operator*(const K& s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const K& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }
    Matrix operator-() const { return K(-1) * *this; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        assert(v.size() == cols_);
        std::vector<K> r(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<K> col(std::size_t j) const {
        std::vector<K> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }
    void set_col(std::size_t j, const std::vector<K>& v) {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    friend Matrix hstack(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_);
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }
    friend Matrix vstack(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.cols_);
        Matrix r(a.rows_ + b.rows_, a.cols_);
        for (std::size_t j = 0; j < a.cols_; ++j) {
            for (std::size_t i = 0; i < a.rows_; ++i) r(i, j) = a(i, j);
            for (std::size_t i = 0; i < b.rows_; ++i) r(a.rows_ + i, j) = b(i, j);
        }
        return r;
    }

    // Kronecker product; index (i1*r2+i2, j1*c2+j2).
    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i1 = 0; i1 < a.rows_; ++i1)
            for (std::size_t j1 = 0; j1 < a.cols_; ++j1) {
                if (a(i1, j1).is_zero()) continue;
                for (std::size_t i2 = 0; i2 < b.rows_; ++i2)
                    for (std::size_t j2 = 0; j2 < b.cols_; ++j2)
                        r(i1 * b.rows_ + i2, j1 * b.cols_ + j2) = a(i1, j1) * b(i2, j2);
            }
        return r;
    }

    // Row echelon reduction in place; returns pivot (row, col) list.
    std::vector<std::pair<std::size_t, std::size_t>> row_reduce() {
        std::vector<std::pair<std::size_t, std::size_t>> pivots;
        std::size_t pr = 0;
        for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
            std::size_t sel = rows_;
            for (std::size_t i = pr; i < rows_; ++i)
                if (!(*this)(i, pc).is_zero()) { sel = i; break; }
            if (sel == rows_) continue;
            if (sel != pr)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(pr, j));
            K inv = (*this)(pr, pc).inv();
            for (std::size_t j = pc; j < cols_; ++j) (*this)(pr, j) = inv * (*this)(pr, j);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == pr) continue;
                K f = (*this)(i, pc);
                if (f.is_zero()) continue;
                for (std::size_t j = pc; j < cols_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(pr, j);
            }
            pivots.emplace_back(pr, pc);
            ++pr;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix tmp = *this;
        return tmp.row_reduce().size();
    }

    // Columns spanning the kernel, in canonical (free-column) form.
    Matrix kernel_basis() const {
        Matrix r = *this;
        auto pivots = r.row_reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (auto& p : pivots) is_pivot[p.second] = true;
        std::size_t nk = cols_ - pivots.size();
        Matrix ker(cols_, nk);
        std::size_t kcol = 0;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            ker(fc, kcol) = K(1);
            for (auto& p : pivots)
                if (p.second < fc) ker(p.second, kcol) = -r(p.first, fc);
            ++kcol;
        }
        return ker;
    }

    // Solve A x = b; nullopt if inconsistent.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        assert(b.size() == rows_);
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.row_reduce();
        std::vector<K> x(cols_, K(0));
        for (auto& p : pivots) {
            if (p.second == cols_) return std::nullopt;
            x[p.second] = aug(p.first, cols_);
        }
        return x;
    }

    // Solve A X = B columnwise; nullopt if any column inconsistent.
    std::optional<Matrix> solve_matrix(const Matrix& b) const {
        assert(b.rows() == rows_);
        Matrix x(cols_, b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto s = solve(b.col(j));
            if (!s) return std::nullopt;
            x.set_col(j, *s);
        }
        return x;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        return solve_matrix(identity(rows_));
    }

    // Subset of columns forming a basis of the column space (first-seen order).
    Matrix column_space_basis() const {
        Matrix tmp = *this;
        auto pivots = tmp.row_reduce();
        Matrix r(rows_, pivots.size());
        for (std::size_t k = 0; k < pivots.size(); ++k)
            r.set_col(k, col(pivots[k].second));
        return r;
    }
};

// Canonical quotient V / span(R): projection to complement coordinates of the
// pivot rows of R's column echelon form, plus the coordinate section.
template <class K>
struct QuotientMap {
    std::size_t ambient_dim = 0;
    Matrix<K> proj;     // q x n
    Matrix<K> section;  // n x q, proj * section = I

    std::size_t dim() const { return proj.rows(); }
};

template <class K>
QuotientMap<K> quotient_by(std::size_t ambient, const Matrix<K>& rel) {
    assert(rel.rows() == ambient || rel.cols() == 0);
    // Column-echelon via row reduction of the transpose.
    Matrix<K> rt = rel.transpose();
    auto pivots = rt.row_reduce();      // pivot cols of rt = pivot rows of rel
    std::vector<bool> is_pivot(ambient, false);
    Matrix<K> ech = rt;                 // rows are reduced relation vectors
    for (auto& p : pivots) is_pivot[p.second] = true;

    std::size_t q = ambient - pivots.size();
    Matrix<K> proj(q, ambient), section(ambient, q);
    // reduction of e_c: e_c already vanishes on pivot coords for complement c
    std::size_t r = 0;
    for (std::size_t c = 0; c < ambient; ++c) {
        if (is_pivot[c]) continue;
        section(c, r) = K(1);
        ++r;
    }
    // proj(v): subtract echelon rows to kill pivot coords, keep complement coords
    // as matrix: for each ambient coord j, express reduce(e_j) over complement.
    for (std::size_t j = 0; j < ambient; ++j) {
        std::vector<K> v(ambient, K(0));
        v[j] = K(1);
        for (auto& p : pivots) {
            // echelon row p.first has leading 1 at column p.second
            K f = v[p.second];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < ambient; ++c)
                v[c] = v[c] - f * ech(p.first, c);
        }
        std::size_t rr = 0;
        for (std::size_t c = 0; c < ambient; ++c) {
            if (is_pivot[c]) continue;
            proj(rr, j) = v[c];
            ++rr;
        }
    }
    QuotientMap<K> qm;
    qm.ambient_dim = ambient;
    qm.proj = proj;
    qm.section = section;
    return qm;
}

// {x : d x in col(W)} as columns.
template <class K>
Matrix<K> preimage(const Matrix<K>& d, const Matrix<K>& w) {
    assert(d.rows() == w.rows() || w.cols() == 0);
    if (w.cols() == 0) return d.kernel_basis();
    // kernel of [d | -W] projected to the x block
    Matrix<K> m = hstack(d, -w);
    Matrix<K> ker = m.kernel_basis();
    Matrix<K> r(d.cols(), ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j)
        for (std::size_t i = 0; i < d.cols(); ++i) r(i, j) = ker(i, j);
    return r.column_space_basis();
}

template <class K>
Matrix<K> subspace_sum(const Matrix<K>& u, const Matrix<K>& v) {
    if (u.cols() == 0) return v.column_space_basis();
    if (v.cols() == 0) return u.column_space_basis();
    return hstack(u, v).column_space_basis();
}

template <class K>
Matrix<K> subspace_intersect(const Matrix<K>& u, const Matrix<K>& v) {
    assert(u.rows() == v.rows());
    if (u.cols() == 0 || v.cols() == 0) return Matrix<K>(u.rows(), 0);
    Matrix<K> m = hstack(u, -v);
    Matrix<K> ker = m.kernel_basis();
    Matrix<K> r(u.rows(), ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        std::vector<K> coeff(u.cols());
        for (std::size_t i = 0; i < u.cols(); ++i) coeff[i] = ker(i, j);
        r.set_col(j, u.apply(coeff));
    }
    return r.column_space_basis();
}

// Is col(u) contained in col(v)?
template <class K>
bool subspace_contained(const Matrix<K>& u, const Matrix<K>& v) {
    if (u.cols() == 0) return true;
    return v.solve_matrix(u).has_value();
}

} // namespace homalg
