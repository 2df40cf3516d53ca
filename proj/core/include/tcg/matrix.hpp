#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tcg/rings.hpp"

namespace tcg {

/// Dense matrix over an involutive ring. All arithmetic exact.
class Mat {
public:
  Mat() : ring_(nullptr), rows_(0), cols_(0) {}
  Mat(RingRef ring, int rows, int cols)
      : ring_(ring), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, ring->zero()) {}

  static Mat identity(RingRef ring, int n);

  RingRef ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Elem& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;  // skips zero entries
  Mat operator-() const;
  Mat scaled(const Elem& c) const;

  bool is_zero() const;
  bool is_identity() const;

  /// Entrywise application of the ring involution.
  Mat theta() const;
  /// Entrywise map into another ring (e.g. lift into trunc, or extract coeff).
  Mat map(RingRef target, const std::function<Elem(const Elem&)>& f) const;

  const std::vector<Elem>& data() const { return a_; }
  std::vector<Elem>& data() { return a_; }

  std::string str() const;  // single-line [[..],[..]]

private:
  RingRef ring_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

/// Determinant by elimination with unit pivots; exact for fields and local
/// rings (every nonzero column either has a unit entry or the matrix is
/// reported singular via a zero determinant / not_invertible).
Elem det(const Mat& m);

/// Inverse via Gauss-Jordan with unit pivots; nullopt when singular.
std::optional<Mat> try_inverse(const Mat& m);

/// Solve A x = b with unit-pivot elimination; nullopt when no unit pivot can
/// be found (singular or not solvable exactly in this ring).
std::optional<std::vector<Elem>> solve_linear(const Mat& a, const std::vector<Elem>& b);

/// Row space accumulated in echelon form over a field.
class RowSpace {
public:
  RowSpace(RingRef ring, int width) : ring_(ring), width_(width) {}

  /// Reduce v against the current rows; if independent, normalize and keep it.
  bool insert(std::vector<Elem> v);
  /// Reduce v without inserting; true iff v lies in the span.
  bool contains(std::vector<Elem> v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Back-substitute to the unique reduced echelon basis of the span.
  void make_reduced();

private:
  void reduce(std::vector<Elem>& v) const;

  RingRef ring_;
  int width_;
  std::vector<std::vector<Elem>> rows_;  // sorted by pivot column
  std::vector<int> pivots_;
};

}  // namespace tcg
