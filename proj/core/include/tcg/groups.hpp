#pragma once

#include <optional>
#include <vector>

#include "tcg/matrix.hpp"
#include "tcg/twist.hpp"

namespace tcg {

/// Provenance token of a group element word.
struct GenToken {
  enum class Op { exp_root, torus };
  Op op;
  int rootidx = -1;         // exp_root
  Elem param;               // exp_root parameter t
  std::vector<Elem> chi;    // torus character values on the simple roots
};

/// Invertible adjoint matrix together with the generator word that produced
/// it. Equality is matrix equality; distinct words may represent the same
/// element. The inverse matrix is carried along so no general matrix
/// inversion is ever needed.
class GroupElement {
public:
  GroupElement() = default;
  GroupElement(Mat m, Mat minv, std::vector<GenToken> word)
      : m_(std::move(m)), minv_(std::move(minv)), word_(std::move(word)) {}

  const Mat& matrix() const { return m_; }
  const Mat& inverse_matrix() const { return minv_; }
  const std::vector<GenToken>& word() const { return word_; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  /// g x g^-1 (the action g o X of conjugation on matrices)
  Mat conj(const Mat& x) const { return m_ * x * minv_; }
  GroupElement conj(const GroupElement& x) const;

  bool operator==(const GroupElement& o) const { return m_ == o.m_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool is_identity() const { return m_.is_identity(); }

private:
  Mat m_, minv_;
  std::vector<GenToken> word_;
};

GroupElement identity_element(const TwistSetup& s);

/// x_alpha(t) = exp(t ad X_alpha) = 1 + t ad + t^2 ad^2 / 2 (exact since
/// ad(X_alpha)^3 = 0); requires 1/2.
GroupElement exp_root(const TwistSetup& s, int rootidx, const Elem& t);

/// The sigma-fixed class generators:
///   A1:    x_[a](t) = x_a(t),                        t in R_theta
///   A1^2:  x_[a](t) = x_a(t) x_abar(theta(t)),       t in R
///   A2:    x_[a](t,u) = x_a(t) x_abar(theta(t)) x_{a+abar}(N_{abar,a} u),
///          with u + theta(u) = t theta(t)
GroupElement twisted_generator(const TwistSetup& s, const TwistedClass& cls, const Elem& t,
                               const std::optional<Elem>& u = std::nullopt);

/// w_alpha(t) = x_alpha(t) x_{-alpha}(-1/t) x_alpha(t), h_alpha(t) = w(t) w(1)^-1
std::pair<GroupElement, GroupElement> w_and_h(const TwistSetup& s, int rootidx, const Elem& t);

/// Character of the root lattice, determined by its invertible values on the
/// simple roots.
struct Character {
  std::vector<Elem> values;
};

Elem chi_on_root(const TwistSetup& s, const Character& chi, const Root& beta);

/// h(chi): 1 on the Cartan coordinates, chi(beta) on X_beta.
GroupElement torus_element(const TwistSetup& s, const Character& chi);

/// chi(rho(alpha_i)) = theta(chi(alpha_i)) for all i
bool is_self_conjugate(const TwistSetup& s, const Character& chi);

/// The +-1 permutation matrix of rho-with-signs on the adjoint basis.
Mat sigma_basis_matrix(const TwistSetup& s);
/// sigma(g) = S theta(g) S, the semi-linear conjugation on matrices.
Mat sigma_on_matrix(const TwistSetup& s, const Mat& m);
GroupElement sigma_on_group(const TwistSetup& s, const GroupElement& g);
bool sigma_fixed(const TwistSetup& s, const GroupElement& g);

}  // namespace tcg
