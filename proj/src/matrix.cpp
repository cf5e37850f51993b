#include "logres/matrix.hpp"

#include <optional>

namespace logres {

void Matrix::append_row(const std::vector<NFElem>& row) {
    if (cols_ == 0 && rows_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::runtime_error("Matrix::append_row: width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<size_t> Matrix::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = rows_;
        for (size_t i = r; i < rows_; ++i)
            if (!at(i, c).is_zero()) { sel = i; break; }
        if (sel == rows_) continue;
        if (sel != r)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(sel, j));
        NFElem inv = at(r, c).inverse();
        for (size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            NFElem f = at(i, c);
            for (size_t j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

std::vector<std::vector<NFElem>> Matrix::null_space() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<NFElem>> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<NFElem> v(cols_, NFElem::zero(field_));
        v[c] = NFElem::one(field_);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<NFElem>> Matrix::solve(const std::vector<NFElem>& b) const {
    if (b.size() != rows_) throw std::runtime_error("Matrix::solve: rhs size mismatch");
    Matrix m(field_, rows_, cols_ + 1);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        m.at(r, cols_) = b[r];
    }
    auto pivots = m.rref();
    for (size_t c : pivots)
        if (c == cols_) return std::nullopt;
    std::vector<NFElem> x(cols_, NFElem::zero(field_));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(r, cols_);
    return x;
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

} // namespace logres
