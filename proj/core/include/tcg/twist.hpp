#pragma once

#include <string>
#include <vector>

#include "tcg/chevalley.hpp"
#include "tcg/roots.hpp"

namespace tcg {

/// One twisted configuration: root system, diagram symmetry, orbit classes,
/// sign-normalized structure table, and the working ring.
struct TwistSetup {
  const RootSystem* sys = nullptr;
  DiagramPerm rho;
  std::vector<TwistedClass> classes;
  StructureTable table;  // sign-fixed: eps available
  RingRef ring = nullptr;
  std::vector<int> rho_idx;    // root index -> index of rho(root)
  std::vector<int> class_idx;  // root index -> index into classes

  int dim() const { return adjoint_dim(*sys); }
  int rho_of(int rootidx) const { return rho_idx[rootidx]; }
  const TwistedClass& class_of(int rootidx) const { return classes[class_idx[rootidx]]; }
  /// the class [-alpha] of a given class [alpha]
  const TwistedClass& opposite(const TwistedClass& c) const {
    return class_of(sys->negate(c.rep));
  }
  std::vector<const TwistedClass*> positive_classes() const;
  /// class whose representative has the given coordinates; null if none
  const TwistedClass* find_class(const Root& rep) const;
  bool has_a2_classes() const;

  Elem antifixed() const { return ring->antifixed_unit(); }
  TwistSetup with_ring(RingRef r) const;
};

/// Build the setup for A2..A9 / D4..D9 / E6 with the standard order-2 twist.
TwistSetup make_twist_setup(const std::string& kind, RingRef ring);

/// sigma = rho o theta acting semi-linearly on L(Phi,R).
LieVector sigma_on_algebra(const TwistSetup& s, const LieVector& v);
bool sigma_fixed(const TwistSetup& s, const LieVector& v);

enum class TBLabel { XPlus, XMinusI, XMinusII, HPlus, HMinus };
const char* name_of(TBLabel l);

struct TwistedBasisElement {
  TBLabel label;
  int cls;  // index into setup.classes
  LieVector vec;
  std::string name;
};

/// The explicit R_theta-basis of L_sigma(Phi,R):
///   X+[alpha] for every class, X-[alpha](I) for A1^2/A2, X-[alpha](II) for
///   A2, and H+[alpha_i] / H-[alpha_i] for the simple classes.
/// Requires 1/2, an antifixed unit, and 1/3 when A2 classes are present.
std::vector<TwistedBasisElement> twisted_basis(const TwistSetup& s);

/// Unique R-coordinates of v over the twisted basis, in basis order.
/// sigma-fixed vectors get coordinates in R_theta.
std::vector<Elem> coordinates_in_twisted_basis(const TwistSetup& s,
                                               const std::vector<TwistedBasisElement>& basis,
                                               const LieVector& v);

}  // namespace tcg
