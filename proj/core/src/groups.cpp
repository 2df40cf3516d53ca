#include "tcg/groups.hpp"

namespace tcg {

GroupElement GroupElement::operator*(const GroupElement& o) const {
  std::vector<GenToken> w = word_;
  w.insert(w.end(), o.word_.begin(), o.word_.end());
  return GroupElement(m_ * o.m_, o.minv_ * minv_, std::move(w));
}

GroupElement GroupElement::inverse() const {
  std::vector<GenToken> w;
  w.reserve(word_.size());
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    GenToken t = *it;
    if (t.op == GenToken::Op::exp_root) {
      t.param = -t.param;
    } else {
      for (auto& v : t.chi) v = v.inv();
    }
    w.push_back(std::move(t));
  }
  return GroupElement(minv_, m_, std::move(w));
}

GroupElement GroupElement::conj(const GroupElement& x) const {
  return *this * x * inverse();
}

GroupElement identity_element(const TwistSetup& s) {
  Mat id = Mat::identity(s.ring, s.dim());
  return GroupElement(id, id, {});
}

GroupElement exp_root(const TwistSetup& s, int rootidx, const Elem& t) {
  RingRef R = s.ring;
  if (!R->has_half()) fail(errc::no_half, R->descriptor());
  Elem half = R->from_int(2).inv();
  Mat ad = ad_matrix(s.table, LieVector::X(*s.sys, R, rootidx));
  Mat ad2 = ad * ad;
  auto build = [&](const Elem& p) {
    return Mat::identity(R, s.dim()) + ad.scaled(p) + ad2.scaled(p * p * half);
  };
  GenToken tok{GenToken::Op::exp_root, rootidx, t, {}};
  return GroupElement(build(t), build(-t), {tok});
}

GroupElement twisted_generator(const TwistSetup& s, const TwistedClass& cls, const Elem& t,
                               const std::optional<Elem>& u) {
  RingRef R = s.ring;
  Elem tt = R->lift(t);
  switch (cls.kind) {
    case ClassKind::A1: {
      if (u) fail(errc::param_constraint_violated, "A1 class takes a single parameter");
      if (tt.theta() != tt)
        fail(errc::param_constraint_violated,
             "A1 class requires t in R_theta, got t = " + tt.str());
      return exp_root(s, cls.rep, tt);
    }
    case ClassKind::A1Sq: {
      if (u) fail(errc::param_constraint_violated, "A1^2 class takes a single parameter");
      return exp_root(s, cls.rep, tt) * exp_root(s, cls.partner, tt.theta());
    }
    case ClassKind::A2: {
      if (!u) fail(errc::param_constraint_violated, "A2 class requires (t,u)");
      Elem uu = R->lift(*u);
      if (uu + uu.theta() != tt * tt.theta())
        fail(errc::param_constraint_violated,
             "A2 class requires u + theta(u) = t theta(t); got t = " + tt.str() +
                 ", u = " + uu.str());
      int nsign = s.table.N(cls.partner, cls.rep);
      return exp_root(s, cls.rep, tt) * exp_root(s, cls.partner, tt.theta()) *
             exp_root(s, cls.middle, uu * R->from_int(nsign));
    }
  }
  fail(errc::unsupported_kind, "unknown class kind");
}

std::pair<GroupElement, GroupElement> w_and_h(const TwistSetup& s, int rootidx, const Elem& t) {
  if (!t.is_unit()) fail(errc::not_invertible, "w_alpha(t) requires invertible t");
  int neg = s.sys->negate(rootidx);
  auto w_of = [&](const Elem& v) {
    return exp_root(s, rootidx, v) * exp_root(s, neg, -(v.inv())) * exp_root(s, rootidx, v);
  };
  GroupElement w = w_of(t);
  GroupElement h = w * w_of(s.ring->one()).inverse();
  return {std::move(w), std::move(h)};
}

Elem chi_on_root(const TwistSetup& s, const Character& chi, const Root& beta) {
  Elem v = s.ring->one();
  for (int i = 0; i < s.sys->rank(); ++i)
    if (beta[i]) v *= chi.values[i].pow(beta[i]);
  return v;
}

GroupElement torus_element(const TwistSetup& s, const Character& chi) {
  const RootSystem& sys = *s.sys;
  RingRef R = s.ring;
  for (const auto& v : chi.values)
    if (!v.is_unit())
      fail(errc::not_invertible, "character value " + v.str() + " is not invertible");
  Mat m = Mat::identity(R, s.dim());
  Mat minv = m;
  for (int i = 0; i < sys.size(); ++i) {
    Elem v = chi_on_root(s, chi, sys.root(i));
    m.at(sys.rank() + i, sys.rank() + i) = v;
    minv.at(sys.rank() + i, sys.rank() + i) = v.inv();
  }
  GenToken tok{GenToken::Op::torus, -1, Elem(), chi.values};
  return GroupElement(std::move(m), std::move(minv), {tok});
}

bool is_self_conjugate(const TwistSetup& s, const Character& chi) {
  for (int i = 0; i < s.sys->rank(); ++i)
    if (chi.values[s.rho(i)] != chi.values[i].theta()) return false;
  return true;
}

Mat sigma_basis_matrix(const TwistSetup& s) {
  const RootSystem& sys = *s.sys;
  Mat S(s.ring, s.dim(), s.dim());
  for (int i = 0; i < sys.rank(); ++i) S.at(s.rho(i), i) = s.ring->one();
  for (int i = 0; i < sys.size(); ++i)
    S.at(sys.rank() + s.rho_of(i), sys.rank() + i) = s.ring->from_int(s.table.eps(i));
  return S;
}

Mat sigma_on_matrix(const TwistSetup& s, const Mat& m) {
  Mat S = sigma_basis_matrix(s);
  return S * m.theta() * S;
}

GroupElement sigma_on_group(const TwistSetup& s, const GroupElement& g) {
  std::vector<GenToken> w;
  w.reserve(g.word().size());
  for (GenToken t : g.word()) {
    if (t.op == GenToken::Op::exp_root) {
      int img = s.rho_of(t.rootidx);
      t.param = t.param.theta() * s.ring->from_int(s.table.eps(t.rootidx));
      t.rootidx = img;
    } else {
      std::vector<Elem> vals(t.chi.size());
      for (std::size_t i = 0; i < t.chi.size(); ++i) vals[i] = t.chi[s.rho(static_cast<int>(i))].theta();
      t.chi = std::move(vals);
    }
    w.push_back(std::move(t));
  }
  return GroupElement(sigma_on_matrix(s, g.matrix()), sigma_on_matrix(s, g.inverse_matrix()),
                      std::move(w));
}

bool sigma_fixed(const TwistSetup& s, const GroupElement& g) {
  return sigma_on_matrix(s, g.matrix()) == g.matrix();
}

}  // namespace tcg
