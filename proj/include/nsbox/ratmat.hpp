#pragma once

#include <nsbox/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsbox {

/// Dense matrix of exact rationals. Row-major, desk scale.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

inline RatMatrix transpose_times_self(const RatMatrix& a) {
  RatMatrix out(a.cols(), a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) {
      Rational sum(0);
      for (std::size_t r = 0; r < a.rows(); ++r) {
        if (a(r, i).is_zero() || a(r, j).is_zero()) continue;
        sum += a(r, i) * a(r, j);
      }
      out(i, j) = sum;
      if (i != j) out(j, i) = std::move(sum);
    }
  return out;
}

/// Rank over the rationals by fraction-free (Bareiss) Gaussian elimination.
/// Rows are cleared to integers first; the elimination then stays in
/// arbitrary-precision integers with exact divisions only.
inline std::size_t rank_exact(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<BigInt>> w(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const BigInt& d = m(i, j).den();
      l = l / gcd(l, d) * d;
    }
    for (std::size_t j = 0; j < cols; ++j)
      w[i][j] = m(i, j).num() * (l / m(i, j).den());
  }

  std::size_t rank = 0;
  BigInt prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    // Pivot on the smallest nonzero magnitude to limit coefficient growth.
    std::size_t piv = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      if (w[i][col] == 0) continue;
      if (piv == rows || abs(w[i][col]) < abs(w[piv][col])) piv = i;
    }
    if (piv == rows) continue;
    std::swap(w[rank], w[piv]);
    const BigInt pivot = w[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (w[i][col] == 0) {
        // Bareiss still rescales untouched rows to keep divisions exact.
        for (std::size_t j = col + 1; j < cols; ++j)
          if (w[i][j] != 0) w[i][j] = w[i][j] * pivot / prev_pivot;
      } else {
        const BigInt factor = w[i][col];
        for (std::size_t j = col + 1; j < cols; ++j)
          w[i][j] = (w[i][j] * pivot - factor * w[rank][j]) / prev_pivot;
      }
      w[i][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

struct PsdReport {
  bool is_psd = false;
  bool is_pd = false;
  std::size_t rank = 0;
  std::string issue; // first certificate of failure, empty on success
};

/// Exact positive-semidefiniteness test by rational pivoted Cholesky
/// (outer-product LDL^T with greatest-diagonal pivoting). Decides PSD and PD
/// exactly; no tolerances involved.
inline PsdReport exact_psd_check(const RatMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("exact_psd_check: matrix not symmetric");
  const std::size_t n = m.rows();
  RatMatrix w = m;
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  PsdReport rep;
  while (!active.empty()) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < active.size(); ++t)
      if (w(active[t], active[t]) > w(active[best], active[best])) best = t;
    const std::size_t p = active[best];
    const Rational& d = w(p, p);
    if (d.sign() < 0) {
      rep.issue = "diagonal entry " + std::to_string(p) + " of the reduced matrix is " + d.str();
      return rep;
    }
    if (d.is_zero()) {
      // All remaining diagonals are <= 0 and none is negative, so they are
      // all zero; PSD now requires the whole remaining block to vanish.
      for (std::size_t s = 0; s < active.size(); ++s)
        for (std::size_t t = s; t < active.size(); ++t)
          if (!w(active[s], active[t]).is_zero()) {
            rep.issue = "zero diagonal with nonzero residual at (" +
                        std::to_string(active[s]) + "," + std::to_string(active[t]) + ")";
            return rep;
          }
      break;
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    ++rep.rank;
    for (std::size_t s = 0; s < active.size(); ++s) {
      const std::size_t i = active[s];
      if (w(i, p).is_zero()) continue;
      const Rational li = w(i, p) / d;
      for (std::size_t t = s; t < active.size(); ++t) {
        const std::size_t j = active[t];
        if (w(j, p).is_zero()) continue;
        Rational upd = w(i, j) - li * w(j, p);
        w(i, j) = upd;
        if (i != j) w(j, i) = std::move(upd);
      }
    }
  }
  rep.is_psd = true;
  rep.is_pd = (rep.rank == n);
  return rep;
}

} // namespace nsbox
