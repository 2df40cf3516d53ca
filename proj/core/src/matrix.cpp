#include "tcg/matrix.hpp"

#include <algorithm>

namespace tcg {

Mat Mat::identity(RingRef ring, int n) {
  Mat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring->one();
  return m;
}

bool Mat::operator==(const Mat& o) const {
  if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return a_ == o.a_;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (ring_ != o.ring_ || cols_ != o.rows_) fail(errc::ring_mismatch, "matrix product shape/ring");
  Mat r(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Elem& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Elem& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

Mat Mat::scaled(const Elem& c) const {
  Mat r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].is_zero()) r.a_[i] = a_[i] * c;
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

Mat Mat::theta() const {
  Mat r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].theta();
  return r;
}

Mat Mat::map(RingRef target, const std::function<Elem(const Elem&)>& f) const {
  Mat r(target, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f(a_[i]);
  return r;
}

std::string Mat::str() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += at(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

namespace {

// returns index of a row >= r0 whose entry in column c is a unit, or -1
int find_unit_pivot(const Mat& m, int r0, int c) {
  for (int r = r0; r < m.rows(); ++r)
    if (m.at(r, c).is_unit()) return r;
  return -1;
}

}  // namespace

Elem det(const Mat& m) {
  if (m.rows() != m.cols()) fail(errc::ring_mismatch, "det of non-square matrix");
  Mat w = m;
  RingRef ring = m.ring();
  Elem d = ring->one();
  int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int p = find_unit_pivot(w, c, c);
    if (p < 0) {
      bool all_zero = true;
      for (int r = c; r < n; ++r)
        if (!w.at(r, c).is_zero()) all_zero = false;
      if (all_zero) return ring->zero();
      fail(errc::not_invertible, "no unit pivot in column " + std::to_string(c));
    }
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(c, j));
      d = -d;
    }
    Elem piv = w.at(c, c);
    d *= piv;
    Elem pinv = piv.inv();
    for (int r = c + 1; r < n; ++r) {
      Elem f = w.at(r, c);
      if (f.is_zero()) continue;
      f = f * pinv;
      for (int j = c; j < n; ++j) w.at(r, j) -= f * w.at(c, j);
    }
  }
  return d;
}

std::optional<Mat> try_inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  RingRef ring = m.ring();
  Mat w = m;
  Mat inv = Mat::identity(ring, n);
  for (int c = 0; c < n; ++c) {
    int p = find_unit_pivot(w, c, c);
    if (p < 0) return std::nullopt;
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(p, j), w.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    Elem pinv = w.at(c, c).inv();
    for (int j = 0; j < n; ++j) {
      w.at(c, j) *= pinv;
      inv.at(c, j) *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      Elem f = w.at(r, c);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        w.at(r, j) -= f * w.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<Elem>> solve_linear(const Mat& a, const std::vector<Elem>& b) {
  if (a.rows() != static_cast<int>(b.size())) return std::nullopt;
  int n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Mat w = a;
  std::vector<Elem> rhs = b;
  for (int c = 0; c < n; ++c) {
    int p = find_unit_pivot(w, c, c);
    if (p < 0) return std::nullopt;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(c, j));
      std::swap(rhs[p], rhs[c]);
    }
    Elem pinv = w.at(c, c).inv();
    for (int j = 0; j < n; ++j) w.at(c, j) *= pinv;
    rhs[c] *= pinv;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      Elem f = w.at(r, c);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) w.at(r, j) -= f * w.at(c, j);
      rhs[r] -= f * rhs[c];
    }
  }
  return rhs;
}

// ---------------------------------------------------------------------------

void RowSpace::reduce(std::vector<Elem>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Elem f = c;  // rows are normalized to pivot 1
    const auto& row = rows_[r];
    for (int j = pivots_[r]; j < width_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
}

bool RowSpace::insert(std::vector<Elem> v) {
  reduce(v);
  int piv = -1;
  for (int j = 0; j < width_; ++j)
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  Elem inv = v[piv].inv();  // field: nonzero entries are units
  for (int j = piv; j < width_; ++j)
    if (!v[j].is_zero()) v[j] *= inv;
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool RowSpace::contains(std::vector<Elem> v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void RowSpace::make_reduced() {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t s = r + 1; s < rows_.size(); ++s) {
      Elem f = rows_[r][pivots_[s]];
      if (f.is_zero()) continue;
      for (int j = pivots_[s]; j < width_; ++j)
        if (!rows_[s][j].is_zero()) rows_[r][j] -= f * rows_[s][j];
    }
  }
}

}  // namespace tcg
