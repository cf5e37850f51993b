#pragma once

#include "logres/numberfield.hpp"

#include <optional>
#include <vector>

namespace logres {

// Dense exact matrix over Q(a) with deterministic reduced row echelon form.
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr f, size_t rows, size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols),
          a_(rows * cols, NFElem::zero(field_)) {}

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    NFElem& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const NFElem& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void append_row(const std::vector<NFElem>& row);

    // In-place reduced row echelon form (first nonzero column pivots, pivot 1,
    // cleared above and below); returns pivot columns. Deterministic.
    std::vector<size_t> rref();
    size_t rank() const;
    // Basis of the right null space, canonical w.r.t. rref (free variables in
    // increasing column order, each basis vector has 1 in its free slot).
    std::vector<std::vector<NFElem>> null_space() const;
    // Least solution of A x = b in the echelon sense (free vars = 0); nullopt if
    // inconsistent.
    std::optional<std::vector<NFElem>> solve(const std::vector<NFElem>& b) const;

    Matrix transposed() const;

  private:
    FieldPtr field_ = NumberField::rationals();
    size_t rows_ = 0, cols_ = 0;
    std::vector<NFElem> a_;
};

} // namespace logres
