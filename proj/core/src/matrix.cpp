#include "masseyx/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace masseyx {

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::columns(std::span<const std::size_t> which) const {
  Matrix out(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < which.size(); ++j) out(r, j) = (*this)(r, which[j]);
  return out;
}

Echelon rref(const FieldSpec& f, Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pr = lead;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(lead, pr);
    const Elem s = f.inv(m(lead, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) = f.mul(m(lead, j), s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Elem factor = f.neg(m(r, c));
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.add(m(r, j), f.mul(factor, m(lead, j)));
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(0, m.cols());
  for (std::size_t r = 0; r < lead; ++r) reduced.append_row(m.row(r));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const FieldSpec& f, const Matrix& m) { return rref(f, m).pivots.size(); }

Matrix right_kernel(const FieldSpec& f, const Matrix& m) {
  const auto [r, pivots] = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix kernel(0, m.cols());
  std::vector<Elem> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    kernel.append_row(v);
  }
  return kernel;
}

Matrix left_kernel(const FieldSpec& f, const Matrix& m) { return right_kernel(f, m.transpose()); }

std::optional<std::vector<Elem>> solve_left(const FieldSpec& f, const Matrix& m, std::span<const Elem> b) {
  if (b.size() != m.cols()) throw std::invalid_argument("right-hand side length mismatch");
  // u m = b  <=>  m^T u^T = b^T; eliminate on the augmented system [m^T | b^T].
  Matrix aug(m.cols(), m.rows() + 1);
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = 0; j < m.rows(); ++j) aug(i, j) = m(j, i);
    aug(i, m.rows()) = b[i];
  }
  const auto [r, pivots] = rref(f, std::move(aug));
  if (!pivots.empty() && pivots.back() == m.rows()) return std::nullopt;
  std::vector<Elem> u(m.rows(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) u[pivots[i]] = r(i, m.rows());
  return u;
}

std::vector<Elem> row_times(const FieldSpec& f, std::span<const Elem> u, const Matrix& m) {
  std::vector<Elem> out(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(u[i], m(i, j)));
  }
  return out;
}

bool rows_orthogonal(const FieldSpec& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("orthogonality check on different lengths");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      Elem s = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) s = f.add(s, f.mul(a(i, c), b(j, c)));
      if (s != 0) return false;
    }
  }
  return true;
}

}  // namespace masseyx
