#ifndef SSCODE_LINALG_HPP
#define SSCODE_LINALG_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sscode/galois.hpp"

/// Dense exact linear algebra over a runtime Field.  Rows are stored
/// contiguously as raw encodings.  The reduced row-echelon form used
/// everywhere picks the leftmost nonzero column and the smallest row
/// index, so it is the unique canonical form of a row space.

namespace sscode {

class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    gf_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    gf_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const gf_t* row(std::size_t r) const { return a_.data() + r * cols_; }
    gf_t* row(std::size_t r) { return a_.data() + r * cols_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && *field_ == *o.field_;
    }

    void append_row(const std::vector<gf_t>& r) {
        if (r.size() != cols_) throw std::invalid_argument("matrix: row length mismatch");
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }

    std::vector<gf_t> row_vec(std::size_t r) const { return {row(r), row(r) + cols_}; }

    static Matrix from_rows(FieldPtr f, const std::vector<std::vector<gf_t>>& rows) {
        std::size_t cols = rows.empty() ? 0 : rows[0].size();
        Matrix m(std::move(f), 0, cols);
        for (const auto& r : rows) m.append_row(r);
        return m;
    }

    static Matrix identity(FieldPtr f, std::size_t n) {
        Matrix m(std::move(f), n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// In-place reduced row-echelon form; returns the pivot columns.
    std::vector<std::size_t> rref() {
        const Field& F = *field_;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && at(sel, c) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            gf_t inv = F.inv(at(r, c));
            if (inv != 1)
                for (std::size_t j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                gf_t v = at(i, c);
                if (v == 0) continue;
                for (std::size_t j = c; j < cols_; ++j) at(i, j) = F.sub(at(i, j), F.mul(v, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        rows_ = r;
        a_.resize(rows_ * cols_);
        return pivots;
    }

    std::size_t rank() const {
        Matrix copy = *this;
        return copy.rref().size();
    }

    /// Basis of { v : M v^T = 0 }, returned in canonical RREF.
    Matrix nullspace() const {
        Matrix red = *this;
        auto pivots = red.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        Matrix ns(field_, 0, cols_);
        const Field& F = *field_;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<gf_t> v(cols_, 0);
            v[c] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(red.at(i, c));
            ns.append_row(v);
        }
        ns.rref();
        return ns;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix multiply(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix: dimension mismatch in product");
        const Field& F = *field_;
        Matrix out(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                gf_t v = at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out.at(i, j) = F.add(out.at(i, j), F.mul(v, o.at(k, j)));
            }
        return out;
    }

    Matrix stacked(const Matrix& o) const {
        if (cols_ != o.cols_) throw std::invalid_argument("matrix: column mismatch in stack");
        Matrix s(field_, 0, cols_);
        s.a_ = a_;
        s.rows_ = rows_;
        s.a_.insert(s.a_.end(), o.a_.begin(), o.a_.end());
        s.rows_ += o.rows_;
        return s;
    }

    Matrix select_columns(const std::vector<std::size_t>& cols) const {
        Matrix s(field_, rows_, cols.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(i, cols[j]);
        return s;
    }

    /// Entry-wise x -> x^(p^k).
    Matrix frobenius_iter(unsigned k) const {
        Matrix out = *this;
        for (auto& v : out.a_) v = field_->frobenius_iter(v, k);
        return out;
    }

    /// Reduces v against this matrix (assumed in RREF); returns the residue.
    std::vector<gf_t> reduce_against(std::vector<gf_t> v) const {
        const Field& F = *field_;
        if (v.size() != cols_) throw std::invalid_argument("matrix: vector length mismatch");
        std::size_t c = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            while (c < cols_ && at(i, c) == 0) ++c;  // pivot column of row i
            if (c == cols_) break;
            if (v[c] != 0) {
                gf_t f = v[c];
                for (std::size_t j = c; j < cols_; ++j) v[j] = F.sub(v[j], F.mul(f, at(i, j)));
            }
        }
        return v;
    }

    /// Membership of v in the row space; requires RREF storage.
    bool row_space_contains(const std::vector<gf_t>& v) const {
        auto res = reduce_against(v);
        for (gf_t x : res)
            if (x != 0) return false;
        return true;
    }

    /// Coefficients lambda with lambda * M = v, if v lies in the row space
    /// of this RREF matrix.
    std::vector<gf_t> solve_row_combination(std::vector<gf_t> v) const {
        const Field& F = *field_;
        std::vector<gf_t> lambda(rows_, 0);
        std::size_t c = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            while (c < cols_ && at(i, c) == 0) ++c;
            if (c == cols_) break;
            if (v[c] != 0) {
                gf_t f = v[c];
                lambda[i] = f;
                for (std::size_t j = c; j < cols_; ++j) v[j] = F.sub(v[j], F.mul(f, at(i, j)));
            }
        }
        for (gf_t x : v)
            if (x != 0) throw std::domain_error("matrix: vector not in row space");
        return lambda;
    }

  private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<gf_t> a_;
};

}  // namespace sscode

#endif
