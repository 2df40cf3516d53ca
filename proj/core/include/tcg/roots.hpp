#pragma once

#include <string>
#include <vector>

#include "tcg/errors.hpp"

namespace tcg {

/// Root as an integer coordinate vector over the simple system.
class Root {
public:
  Root() = default;
  explicit Root(std::vector<int> coords) : c_(std::move(coords)) {}

  const std::vector<int>& coords() const { return c_; }
  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[i]; }

  bool operator==(const Root& o) const { return c_ == o.c_; }
  bool operator!=(const Root& o) const { return !(*this == o); }
  bool operator<(const Root& o) const { return c_ < o.c_; }

  Root operator-() const;
  Root operator+(const Root& o) const;

  int height() const;        // sum of coordinates
  bool is_positive() const;  // all coordinates >= 0 (and nonzero)
  std::string str() const;   // e.g. "1,1,0" (coordinates over simple roots)

  static Root parse(const std::string& text);

private:
  std::vector<int> c_;
};

enum class Family { A, D, E6 };

/// ADE root system with the Bourbaki simple system; roots are listed
/// positives-first, each block in ascending lexicographic coordinate order.
class RootSystem {
public:
  /// kind: one of A2..A9, D4..D9, E6. Interned; references stay valid.
  static const RootSystem& get(const std::string& kind);
  static const RootSystem& get(Family f, int n);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  const std::string& name() const { return name_; }

  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return size() / 2; }
  const Root& root(int i) const { return roots_[i]; }
  const std::vector<Root>& roots() const { return roots_; }

  int index(const Root& r) const;           // -1 if not a root
  bool contains(const Root& r) const { return index(r) >= 0; }
  int negate(int i) const { return neg_[i]; }

  int cartan(int i, int j) const { return cartan_[i][j]; }
  /// <beta, alpha_i> = 2(beta, alpha_i)/(alpha_i, alpha_i)
  int pairing_simple(const Root& beta, int i) const;
  /// <beta, alpha>; simply laced, so this is the symmetric form with (a,a)=2
  int pairing(const Root& beta, const Root& alpha) const;

  /// Weyl reflection w_alpha(beta) = beta - <beta,alpha> alpha
  Root reflect(const Root& alpha, const Root& beta) const;

private:
  RootSystem(Family f, int n);
  void build();

  Family family_;
  int rank_;
  std::string name_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::vector<int> neg_;
};

/// Order-2 angle-preserving permutation of the simple roots.
struct DiagramPerm {
  std::vector<int> perm;  // image of simple index i

  int operator()(int i) const { return perm[i]; }
  Root apply(const Root& r) const;
  bool is_identity() const;
};

/// The standard order-2 diagram symmetry: A(n) flip, D(n) branch swap,
/// E6 flip fixing nodes 2 and 4.
DiagramPerm standard_rho(const RootSystem& sys);

enum class ClassKind { A1, A1Sq, A2 };

const char* name_of(ClassKind k);

/// Equivalence class [alpha] of the twisted root system.
struct TwistedClass {
  ClassKind kind;
  int rep;                   // root index of the representative
  int partner;               // rho(rep) index; == rep for A1
  int middle;                // rep+partner index for A2, else -1
  std::vector<int> members;  // all root indices in the class
  bool negative;             // true if the members are negative roots

  int size() const { return static_cast<int>(members.size()); }
};

/// Partition of the roots into twisted classes, deterministic order:
/// positive classes by representative, then negative classes.
std::vector<TwistedClass> classify_orbits(const RootSystem& sys, const DiagramPerm& rho);

}  // namespace tcg
