#include "kummer/linalg.hpp"

#include <utility>

#include "kummer/error.hpp"

namespace kummer {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    std::copy(row(idx[r]).begin(), row(idx[r]).end(), out.row(r).begin());
  }
  return out;
}

void Matrix::append_rows(const Matrix& o) {
  if (!(field_ == o.field_)) throw Error(Errc::FieldMismatch, "matrices over different fields");
  if (cols_ != o.cols_) throw Error(Errc::ShapeMismatch, "column counts differ");
  data_.insert(data_.end(), o.data_.begin(), o.data_.end());
  rows_ += o.rows_;
}

namespace {

// Addition strategies for the elimination inner loop.
struct XorAdd {
  Field::Elem operator()(Field::Elem a, Field::Elem b) const noexcept { return a ^ b; }
};
struct ModAdd {
  Field::Elem p;
  Field::Elem operator()(Field::Elem a, Field::Elem b) const noexcept {
    const Field::Elem s = a + b;
    return s >= p ? s - p : s;
  }
};
struct TableAdd {
  const std::uint16_t* tab;
  std::size_t q;
  Field::Elem operator()(Field::Elem a, Field::Elem b) const noexcept { return tab[a * q + b]; }
};
struct FieldAdd {
  const Field* F;
  Field::Elem operator()(Field::Elem a, Field::Elem b) const noexcept { return F->add(a, b); }
};

constexpr std::size_t kMaxTableOrder = 1024;

template <typename Fn>
auto with_adder(const Field& F, Fn&& fn) {
  if (F.characteristic() == 2) return fn(XorAdd{});
  if (F.degree() == 1) return fn(ModAdd{F.characteristic()});
  if (F.order() <= kMaxTableOrder) {
    const std::size_t q = F.order();
    std::vector<std::uint16_t> tab(q * q);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        tab[a * q + b] = static_cast<std::uint16_t>(F.add(static_cast<Field::Elem>(a), static_cast<Field::Elem>(b)));
      }
    }
    return fn(TableAdd{tab.data(), q});
  }
  return fn(FieldAdd{&F});
}

// Forward elimination in place on rows [0, rows). Returns pivot columns.
// When `reduce` is set, pivots are scaled to 1 and cleared above as well.
std::vector<std::size_t> eliminate(Matrix& A, bool reduce) {
  const Field& F = A.field();
  const std::size_t rows = A.rows();
  const std::size_t cols = A.cols();
  const auto exp = F.exp_table();
  const auto log = F.log_table();
  const std::uint32_t order = F.order() - 1;
  const std::uint32_t log_m1 = F.log_minus_one();
  std::vector<std::size_t> pivots;
  std::vector<std::uint32_t> plog(cols);

  return with_adder(F, [&](auto add) {
    std::size_t prow = 0;
    for (std::size_t col = 0; col < cols && prow < rows; ++col) {
      std::size_t r = prow;
      while (r < rows && A.at(r, col) == 0) ++r;
      if (r == rows) continue;
      if (r != prow) {
        auto a = A.row(r);
        auto b = A.row(prow);
        std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(col), a.end(), b.begin() + static_cast<std::ptrdiff_t>(col));
      }
      auto pivot = A.row(prow);
      if (reduce && pivot[col] != 1) {
        const Field::Elem inv = F.inv(pivot[col]);
        for (std::size_t c = col; c < cols; ++c) pivot[c] = F.mul(pivot[c], inv);
      }
      const std::uint32_t lpiv = log[pivot[col]];
      for (std::size_t c = col; c < cols; ++c) plog[c] = log[pivot[c]];

      auto clear = [&](std::size_t t) {
        auto target = A.row(t);
        const Field::Elem v = target[col];
        if (v == 0) return;
        // factor = -v / pivot
        std::uint32_t lf = log[v] + log_m1 + order - lpiv;
        lf %= order;
        for (std::size_t c = col; c < cols; ++c) {
          const std::uint32_t lp = plog[c];
          if (lp == Field::kZeroLog) continue;
          target[c] = add(target[c], exp[lp + lf]);
        }
      };
      for (std::size_t t = prow + 1; t < rows; ++t) clear(t);
      if (reduce) {
        for (std::size_t t = 0; t < prow; ++t) clear(t);
      }
      pivots.push_back(col);
      ++prow;
    }
    return pivots;
  });
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return eliminate(work, false).size();
}

std::size_t stack_rank(const Matrix& m1, const Matrix& m2) {
  Matrix work = m1;
  work.append_rows(m2);
  return eliminate(work, false).size();
}

namespace {
EchelonForm echelon(const Matrix& m, bool reduce) {
  Matrix work = m;
  auto piv = eliminate(work, reduce);
  std::vector<std::size_t> keep(piv.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return {work.select_rows(keep), std::move(piv)};
}
}  // namespace

EchelonForm row_basis(const Matrix& m) { return echelon(m, false); }

EchelonForm row_echelon(const Matrix& m) { return echelon(m, true); }

Matrix nullspace(const Matrix& m) {
  const Field& F = m.field();
  const EchelonForm e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix out(F, free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    out.at(k, fc) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out.at(k, e.pivots[r]) = F.neg(e.matrix.at(r, fc));
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  }
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "matrices over different fields");
  if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "inner dimensions differ");
  const Field& F = a.field();
  Matrix out(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Field::Elem c = a.at(i, k);
      if (c == 0) continue;
      auto src = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] = F.add(dst[j], F.mul(c, src[j]));
    }
  }
  return out;
}

}  // namespace kummer
