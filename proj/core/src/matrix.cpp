#include "graphcodes/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace graphcodes {

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

void Matrix::truncate_rows(std::size_t n) {
  assert(n <= rows_);
  rows_ = n;
  data_.resize(rows_ * cols_);
}

void Matrix::append_row(std::span<const Element> values) {
  assert(values.size() == cols_);
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void axpy(std::span<Element> dst, Element c, std::span<const Element> src, const Field& f) noexcept {
  if (c == 0) return;
  const Element* scale = f.mul_row(c);
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = f.add(dst[i], scale[src[i]]);
}

std::vector<std::size_t> rref(Matrix& m, const Field& f) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(r, pr);
    const Element scale = f.inv(m(r, c));
    if (scale != 1) {
      const Element* s = f.mul_row(scale);
      for (auto& x : m.row(r)) x = s[x];
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      axpy(m.row(i), f.neg(m(i, c)), m.row(r), f);
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

std::size_t rank(Matrix m, const Field& f) { return rref(m, f).size(); }

}  // namespace graphcodes
