#pragma once

#include <optional>
#include <vector>

#include "tcg/matrix.hpp"
#include "tcg/roots.hpp"

namespace tcg {

/// Structure constants N_{alpha,beta} of a Chevalley basis (simply laced, so
/// every defined constant is +-1) together with the rho-signs eps_alpha once
/// fix_signs_for_rho has run.
class StructureTable {
public:
  explicit StructureTable(const RootSystem& sys);

  const RootSystem& system() const { return *sys_; }

  /// N_{alpha,beta}; 0 when alpha+beta is not a root.
  int N(int a, int b) const { return n_[static_cast<std::size_t>(a) * sz_ + b]; }
  bool defined(int a, int b) const { return N(a, b) != 0; }

  bool has_eps() const { return !eps_.empty(); }
  int eps(int i) const { return eps_[i]; }

  void set_N(int a, int b, int v) { n_[static_cast<std::size_t>(a) * sz_ + b] = static_cast<signed char>(v); }
  void set_eps(std::vector<signed char> e) { eps_ = std::move(e); }

private:
  const RootSystem* sys_;
  int sz_;
  std::vector<signed char> n_;
  std::vector<signed char> eps_;
};

/// Chevalley structure constants built by induction on root height from
/// extraspecial pairs (fixed total order: height, then reverse-lexicographic).
StructureTable compute_structure_constants(const RootSystem& sys);

/// Rescale the basis so the induced rho satisfies the sign conditions:
/// eps_alpha = eps_{rho(alpha)}; eps = -1 exactly on the middles of A2
/// classes; eps = 1 otherwise. Idempotent; throws sign_fix_failed when the
/// invariant part of the table violates the conditions (cannot happen for the
/// supported systems).
StructureTable fix_signs_for_rho(const StructureTable& table, const DiagramPerm& rho);

/// Element of L(Phi,R) in Chevalley coordinates.
class LieVector {
public:
  LieVector() : sys_(nullptr), ring_(nullptr) {}
  LieVector(const RootSystem& sys, RingRef ring);

  const RootSystem& system() const { return *sys_; }
  RingRef ring() const { return ring_; }

  const Elem& h(int i) const { return h_[i]; }
  Elem& h(int i) { return h_[i]; }
  const Elem& x(int rootidx) const { return x_[rootidx]; }
  Elem& x(int rootidx) { return x_[rootidx]; }

  bool operator==(const LieVector& o) const { return h_ == o.h_ && x_ == o.x_; }
  bool operator!=(const LieVector& o) const { return !(*this == o); }

  LieVector operator+(const LieVector& o) const;
  LieVector operator-(const LieVector& o) const;
  LieVector operator-() const;
  LieVector scaled(const Elem& c) const;
  bool is_zero() const;

  /// basis vectors
  static LieVector H(const RootSystem& sys, RingRef ring, int simple_index);
  static LieVector X(const RootSystem& sys, RingRef ring, int rootidx);
  /// coroot H_alpha = sum coords(alpha)_i H_i (simply laced)
  static LieVector H_root(const RootSystem& sys, RingRef ring, const Root& alpha);

  std::string str() const;

private:
  const RootSystem* sys_;
  RingRef ring_;
  std::vector<Elem> h_;
  std::vector<Elem> x_;
};

/// [x, y] with the table's constants; throws ring_mismatch for foreign rings.
LieVector bracket(const StructureTable& t, const LieVector& x, const LieVector& y);

/// Matrix of ad(x) in the ordered basis (H_1..H_n, X_(roots in system order)).
Mat ad_matrix(const StructureTable& t, const LieVector& x);

/// Dimension of the adjoint representation.
inline int adjoint_dim(const RootSystem& sys) { return sys.rank() + sys.size(); }

/// Recover v from ad(v); nullopt when the matrix is not in the image of ad
/// (verified by re-applying ad) or the Cartan system is not invertible over
/// the ring.
std::optional<LieVector> lie_vector_from_ad(const StructureTable& t, RingRef ring, const Mat& m);

}  // namespace tcg
