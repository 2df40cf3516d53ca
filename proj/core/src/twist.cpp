#include "tcg/twist.hpp"

#include <map>
#include <mutex>

namespace tcg {

namespace {
int simple_index(const Root& r) {
  for (int i = 0; i < r.rank(); ++i)
    if (r[i]) return i;
  return -1;
}
}  // namespace

std::vector<const TwistedClass*> TwistSetup::positive_classes() const {
  std::vector<const TwistedClass*> out;
  for (const auto& c : classes)
    if (!c.negative) out.push_back(&c);
  return out;
}

const TwistedClass* TwistSetup::find_class(const Root& rep) const {
  int idx = sys->index(rep);
  if (idx < 0) return nullptr;
  const TwistedClass& c = class_of(idx);
  return c.rep == idx ? &c : nullptr;
}

bool TwistSetup::has_a2_classes() const {
  for (const auto& c : classes)
    if (c.kind == ClassKind::A2) return true;
  return false;
}

TwistSetup TwistSetup::with_ring(RingRef r) const {
  TwistSetup out = *this;
  out.ring = r;
  return out;
}

namespace {

struct KindData {
  const RootSystem* sys;
  DiagramPerm rho;
  std::vector<TwistedClass> classes;
  StructureTable table;
  std::vector<int> rho_idx;
  std::vector<int> class_idx;
};

const KindData& kind_data(const std::string& kind) {
  static std::map<std::string, KindData*> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(kind);
  if (it != cache.end()) return *it->second;

  const RootSystem& sys = RootSystem::get(kind);
  auto* d = new KindData{&sys, standard_rho(sys), {}, StructureTable(sys), {}, {}};
  d->classes = classify_orbits(sys, d->rho);
  d->table = fix_signs_for_rho(compute_structure_constants(sys), d->rho);
  d->rho_idx.resize(sys.size());
  d->class_idx.assign(sys.size(), -1);
  for (int i = 0; i < sys.size(); ++i) d->rho_idx[i] = sys.index(d->rho.apply(sys.root(i)));
  for (std::size_t c = 0; c < d->classes.size(); ++c)
    for (int m : d->classes[c].members) d->class_idx[m] = static_cast<int>(c);
  cache.emplace(sys.name(), d);
  return *d;
}

}  // namespace

TwistSetup make_twist_setup(const std::string& kind, RingRef ring) {
  const KindData& d = kind_data(RootSystem::get(kind).name());
  TwistSetup s{d.sys, d.rho, d.classes, d.table, ring, d.rho_idx, d.class_idx};
  return s;
}

LieVector sigma_on_algebra(const TwistSetup& s, const LieVector& v) {
  const RootSystem& sys = *s.sys;
  LieVector r(sys, s.ring);
  for (int i = 0; i < sys.rank(); ++i) r.h(s.rho(i)) += v.h(i).theta();
  for (int i = 0; i < sys.size(); ++i) {
    if (v.x(i).is_zero()) continue;
    r.x(s.rho_of(i)) += v.x(i).theta() * s.ring->from_int(s.table.eps(i));
  }
  return r;
}

bool sigma_fixed(const TwistSetup& s, const LieVector& v) {
  return sigma_on_algebra(s, v) == v;
}

const char* name_of(TBLabel l) {
  switch (l) {
    case TBLabel::XPlus: return "X+";
    case TBLabel::XMinusI: return "X-(I)";
    case TBLabel::XMinusII: return "X-(II)";
    case TBLabel::HPlus: return "H+";
    case TBLabel::HMinus: return "H-";
  }
  return "?";
}

std::vector<TwistedBasisElement> twisted_basis(const TwistSetup& s) {
  const RootSystem& sys = *s.sys;
  RingRef R = s.ring;
  if (!R->has_half()) fail(errc::no_half, R->descriptor());
  Elem a = R->antifixed_unit();
  if (s.has_a2_classes() && !R->has_third())
    fail(errc::no_third, R->descriptor() + " cannot host A2 classes");

  std::vector<TwistedBasisElement> out;
  auto X = [&](int i) { return LieVector::X(sys, R, i); };
  auto name = [&](TBLabel l, const TwistedClass& c) {
    return std::string(name_of(l)) + "[" + sys.root(c.rep).str() + "]";
  };

  for (std::size_t ci = 0; ci < s.classes.size(); ++ci) {
    const TwistedClass& c = s.classes[ci];
    if (c.kind == ClassKind::A1) {
      out.push_back({TBLabel::XPlus, static_cast<int>(ci), X(c.rep), name(TBLabel::XPlus, c)});
    } else {
      out.push_back({TBLabel::XPlus, static_cast<int>(ci), X(c.rep) + X(c.partner),
                     name(TBLabel::XPlus, c)});
      out.push_back({TBLabel::XMinusI, static_cast<int>(ci),
                     (X(c.rep) - X(c.partner)).scaled(a), name(TBLabel::XMinusI, c)});
      if (c.kind == ClassKind::A2)
        out.push_back({TBLabel::XMinusII, static_cast<int>(ci), X(c.middle).scaled(a),
                       name(TBLabel::XMinusII, c)});
    }
  }
  for (std::size_t ci = 0; ci < s.classes.size(); ++ci) {
    const TwistedClass& c = s.classes[ci];
    if (c.negative || sys.root(c.rep).height() != 1) continue;  // simple classes only
    LieVector hp = LieVector::H_root(sys, R, sys.root(c.rep));
    if (c.kind != ClassKind::A1) {
      hp = hp + LieVector::H_root(sys, R, sys.root(c.partner));
      out.push_back({TBLabel::HPlus, static_cast<int>(ci), hp, name(TBLabel::HPlus, c)});
      LieVector hm = (LieVector::H_root(sys, R, sys.root(c.rep)) -
                      LieVector::H_root(sys, R, sys.root(c.partner)))
                         .scaled(a);
      out.push_back({TBLabel::HMinus, static_cast<int>(ci), hm, name(TBLabel::HMinus, c)});
    } else {
      out.push_back({TBLabel::HPlus, static_cast<int>(ci), hp, name(TBLabel::HPlus, c)});
    }
  }
  return out;
}

std::vector<Elem> coordinates_in_twisted_basis(const TwistSetup& s,
                                               const std::vector<TwistedBasisElement>& basis,
                                               const LieVector& v) {
  const RootSystem& sys = *s.sys;
  RingRef R = s.ring;
  if (!R->has_half()) fail(errc::no_half, R->descriptor());
  Elem half = R->from_int(2).inv();
  Elem ainv = R->antifixed_unit().inv();

  std::vector<Elem> coords;
  coords.reserve(basis.size());
  for (const auto& e : basis) {
    const TwistedClass& c = s.classes[e.cls];
    switch (e.label) {
      case TBLabel::XPlus:
        if (c.kind == ClassKind::A1)
          coords.push_back(v.x(c.rep));
        else
          coords.push_back((v.x(c.rep) + v.x(c.partner)) * half);
        break;
      case TBLabel::XMinusI:
        coords.push_back((v.x(c.rep) - v.x(c.partner)) * half * ainv);
        break;
      case TBLabel::XMinusII:
        coords.push_back(v.x(c.middle) * ainv);
        break;
      case TBLabel::HPlus: {
        int i = simple_index(sys.root(c.rep));
        if (c.kind == ClassKind::A1)
          coords.push_back(v.h(i));
        else {
          int j = simple_index(sys.root(c.partner));
          coords.push_back((v.h(i) + v.h(j)) * half);
        }
        break;
      }
      case TBLabel::HMinus: {
        int i = simple_index(sys.root(c.rep));
        int j = simple_index(sys.root(c.partner));
        coords.push_back((v.h(i) - v.h(j)) * half * ainv);
        break;
      }
    }
  }

  // exactness check: reconstruct
  LieVector back(sys, R);
  for (std::size_t i = 0; i < basis.size(); ++i)
    back = back + basis[i].vec.scaled(coords[i]);
  if (back != v) fail(errc::singular_basis, "twisted basis failed to reproduce the vector");
  return coords;
}

}  // namespace tcg
