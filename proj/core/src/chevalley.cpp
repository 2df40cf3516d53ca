#include "tcg/chevalley.hpp"

#include <algorithm>
#include <map>

namespace tcg {

StructureTable::StructureTable(const RootSystem& sys)
    : sys_(&sys), sz_(sys.size()), n_(static_cast<std::size_t>(sz_) * sz_, 0) {}

namespace {

// construction order on positive roots: height ascending, then coordinates
// lexicographically descending (this makes the type-A table coincide with the
// matrix-unit realization X_{e_i - e_j} -> E_ij)
std::vector<int> construction_order(const RootSystem& sys) {
  std::vector<int> ord(sys.num_positive());
  for (int i = 0; i < sys.num_positive(); ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(), [&](int a, int b) {
    int ha = sys.root(a).height(), hb = sys.root(b).height();
    if (ha != hb) return ha < hb;
    return sys.root(b).coords() < sys.root(a).coords();
  });
  return ord;
}

struct Builder {
  const RootSystem& sys;
  StructureTable& t;
  std::vector<int> pos_in_order;  // root index -> rank in construction order

  // evaluate N_{x,y} from the positive-pair entries filled so far, using
  // antisymmetry, N_{-a,-b} = -N_{a,b} and the cyclic identity for a+b+c = 0
  int eval(int x, int y) const {
    const Root sum = sys.root(x) + sys.root(y);
    int z = sys.index(sum);
    if (z < 0) return 0;
    bool xp = sys.root(x).is_positive();
    bool yp = sys.root(y).is_positive();
    if (xp && yp) return t.N(x, y);
    if (!xp && !yp) return -eval(sys.negate(x), sys.negate(y));
    if (!xp) return -eval(y, x);
    // x positive, y negative, z = x + y
    if (sys.root(z).is_positive()) return -t.N(sys.negate(y), z);
    return t.N(sys.negate(z), x);
  }

  // extraspecial pair of a non-simple positive root: the decomposition whose
  // first component is least in the construction order
  std::pair<int, int> extraspecial(int gamma) const {
    int best = -1, partner = -1;
    for (int xi = 0; xi < sys.num_positive(); ++xi) {
      const Root diff = sys.root(gamma) + (-sys.root(xi));
      int eta = sys.index(diff);
      if (eta < 0 || !sys.root(eta).is_positive()) continue;
      if (best < 0 || pos_in_order[xi] < pos_in_order[best]) {
        best = xi;
        partner = eta;
      }
    }
    return {best, partner};
  }

  void run() {
    auto ord = construction_order(sys);
    pos_in_order.assign(sys.size(), -1);
    for (std::size_t r = 0; r < ord.size(); ++r) pos_in_order[ord[r]] = static_cast<int>(r);

    for (int gamma : ord) {
      if (sys.root(gamma).height() < 2) continue;
      auto [a, b] = extraspecial(gamma);
      t.set_N(a, b, 1);
      t.set_N(b, a, -1);
      for (int xi = 0; xi < sys.num_positive(); ++xi) {
        int eta = sys.index(sys.root(gamma) + (-sys.root(xi)));
        if (eta < 0 || !sys.root(eta).is_positive()) continue;
        if (pos_in_order[xi] >= pos_in_order[eta]) continue;
        if (xi == a) continue;
        // quadruple (a, b, -xi, -eta) sums to zero; the other two terms refer
        // to sums of strictly smaller height, known by induction
        int na = sys.negate(xi), nb = sys.negate(eta);
        int v = eval(b, na) * eval(a, nb) + eval(na, a) * eval(b, nb);
        t.set_N(xi, eta, v);
        t.set_N(eta, xi, -v);
      }
    }

    // complete the table on mixed and negative pairs
    for (int x = 0; x < sys.size(); ++x)
      for (int y = 0; y < sys.size(); ++y) {
        if (sys.root(x).is_positive() && sys.root(y).is_positive()) continue;
        if (sys.index(sys.root(x) + sys.root(y)) < 0) continue;
        t.set_N(x, y, eval(x, y));
      }
  }
};

}  // namespace

StructureTable compute_structure_constants(const RootSystem& sys) {
  StructureTable t(sys);
  Builder{sys, t, {}}.run();
  return t;
}

// ---------------------------------------------------------------------------

namespace {

// raw signs of the diagram automorphism induced by rho(X_{+-alpha_i}) =
// X_{+-rho(alpha_i)} on the given table
std::vector<signed char> raw_rho_signs(const StructureTable& t, const DiagramPerm& rho) {
  const RootSystem& sys = t.system();
  std::vector<signed char> eps(sys.size(), 0);
  auto ord = construction_order(sys);
  std::vector<int> pos_in_order(sys.size(), -1);
  for (std::size_t r = 0; r < ord.size(); ++r) pos_in_order[ord[r]] = static_cast<int>(r);
  Builder b{sys, const_cast<StructureTable&>(t), pos_in_order};

  for (int gamma : ord) {
    const Root& g = sys.root(gamma);
    int image = sys.index(rho.apply(g));
    if (g.height() == 1) {
      eps[gamma] = 1;
      eps[sys.negate(gamma)] = 1;
      continue;
    }
    auto [a, bb] = b.extraspecial(gamma);
    int abar = sys.index(rho.apply(sys.root(a)));
    int bbar = sys.index(rho.apply(sys.root(bb)));
    int v = eps[a] * eps[bb] * t.N(abar, bbar) * t.N(a, bb);  // division by +-1
    eps[gamma] = static_cast<signed char>(v);
    eps[sys.negate(gamma)] = static_cast<signed char>(v);
    (void)image;
  }
  return eps;
}

}  // namespace

StructureTable fix_signs_for_rho(const StructureTable& table, const DiagramPerm& rho) {
  const RootSystem& sys = table.system();
  std::vector<signed char> eps = raw_rho_signs(table, rho);

  // eps_alpha = eps_{rho(alpha)} is forced by rho^2 = id
  for (int i = 0; i < sys.size(); ++i) {
    int j = sys.index(rho.apply(sys.root(i)));
    if (eps[i] != eps[j])
      fail(errc::sign_fix_failed, "rho signs not symmetric at " + sys.root(i).str());
  }

  auto classes = classify_orbits(sys, rho);

  // rho-fixed roots have rescaling-invariant signs; Lemma-style conditions
  // must already hold there
  for (const auto& c : classes) {
    if (c.kind == ClassKind::A1 && eps[c.rep] != 1)
      fail(errc::sign_fix_failed, "fixed root with eps=-1 at " + sys.root(c.rep).str());
    if (c.kind == ClassKind::A2 && eps[c.middle] != -1)
      fail(errc::sign_fix_failed, "A2 middle with eps=+1 at " + sys.root(c.middle).str());
  }

  // rescale the non-representative wing of each swapped pair
  std::vector<signed char> eta(sys.size(), 1);
  for (const auto& c : classes) {
    if (c.negative || c.kind == ClassKind::A1) continue;
    if (sys.root(c.rep).height() == 1) continue;  // simple classes already have eps=1
    eta[c.partner] = eps[c.rep];
    eta[sys.negate(c.partner)] = eps[c.rep];
  }

  StructureTable out(sys);
  for (int x = 0; x < sys.size(); ++x)
    for (int y = 0; y < sys.size(); ++y) {
      int v = table.N(x, y);
      if (!v) continue;
      int z = sys.index(sys.root(x) + sys.root(y));
      out.set_N(x, y, v * eta[x] * eta[y] * eta[z]);
    }

  std::vector<signed char> neweps(sys.size(), 1);
  for (int i = 0; i < sys.size(); ++i) {
    int j = sys.index(rho.apply(sys.root(i)));
    neweps[i] = static_cast<signed char>(eps[i] * eta[i] * eta[j]);
  }
  out.set_eps(std::move(neweps));
  return out;
}

// ---------------------------------------------------------------------------

LieVector::LieVector(const RootSystem& sys, RingRef ring)
    : sys_(&sys), ring_(ring), h_(sys.rank(), ring->zero()), x_(sys.size(), ring->zero()) {}

LieVector LieVector::operator+(const LieVector& o) const {
  LieVector r(*sys_, ring_);
  for (int i = 0; i < sys_->rank(); ++i) r.h_[i] = h_[i] + o.h_[i];
  for (int i = 0; i < sys_->size(); ++i) r.x_[i] = x_[i] + o.x_[i];
  return r;
}

LieVector LieVector::operator-(const LieVector& o) const { return *this + (-o); }

LieVector LieVector::operator-() const {
  LieVector r(*sys_, ring_);
  for (int i = 0; i < sys_->rank(); ++i) r.h_[i] = -h_[i];
  for (int i = 0; i < sys_->size(); ++i) r.x_[i] = -x_[i];
  return r;
}

LieVector LieVector::scaled(const Elem& c) const {
  LieVector r(*sys_, ring_);
  for (int i = 0; i < sys_->rank(); ++i) r.h_[i] = h_[i] * c;
  for (int i = 0; i < sys_->size(); ++i) r.x_[i] = x_[i] * c;
  return r;
}

bool LieVector::is_zero() const {
  for (const auto& e : h_)
    if (!e.is_zero()) return false;
  for (const auto& e : x_)
    if (!e.is_zero()) return false;
  return true;
}

LieVector LieVector::H(const RootSystem& sys, RingRef ring, int simple_index) {
  LieVector v(sys, ring);
  v.h_[simple_index] = ring->one();
  return v;
}

LieVector LieVector::X(const RootSystem& sys, RingRef ring, int rootidx) {
  LieVector v(sys, ring);
  v.x_[rootidx] = ring->one();
  return v;
}

LieVector LieVector::H_root(const RootSystem& sys, RingRef ring, const Root& alpha) {
  LieVector v(sys, ring);
  for (int i = 0; i < sys.rank(); ++i) v.h_[i] = ring->from_int(alpha[i]);
  return v;
}

std::string LieVector::str() const {
  std::string out;
  for (int i = 0; i < sys_->rank(); ++i)
    if (!h_[i].is_zero()) {
      if (!out.empty()) out += " + ";
      out += "(" + h_[i].str() + ")H" + std::to_string(i + 1);
    }
  for (int i = 0; i < sys_->size(); ++i)
    if (!x_[i].is_zero()) {
      if (!out.empty()) out += " + ";
      out += "(" + x_[i].str() + ")X[" + sys_->root(i).str() + "]";
    }
  return out.empty() ? "0" : out;
}

LieVector bracket(const StructureTable& t, const LieVector& x, const LieVector& y) {
  const RootSystem& sys = t.system();
  if (x.ring() != y.ring()) fail(errc::ring_mismatch, "bracket over different rings");
  RingRef ring = x.ring();
  LieVector r(sys, ring);

  // [H-part of x, X-part of y] and [X-part of x, H-part of y]
  for (int b = 0; b < sys.size(); ++b) {
    const Root& beta = sys.root(b);
    Elem coeff = ring->zero();
    bool any = false;
    for (int i = 0; i < sys.rank(); ++i) {
      int pair = sys.pairing_simple(beta, i);
      if (!pair) continue;
      if (!x.h(i).is_zero()) {
        coeff += x.h(i) * ring->from_int(pair);
        any = true;
      }
    }
    if (any && !y.x(b).is_zero()) r.x(b) += coeff * y.x(b);

    Elem coeff2 = ring->zero();
    bool any2 = false;
    for (int i = 0; i < sys.rank(); ++i) {
      int pair = sys.pairing_simple(beta, i);
      if (!pair) continue;
      if (!y.h(i).is_zero()) {
        coeff2 += y.h(i) * ring->from_int(pair);
        any2 = true;
      }
    }
    if (any2 && !x.x(b).is_zero()) r.x(b) -= coeff2 * x.x(b);
  }

  // [X, X]
  for (int a = 0; a < sys.size(); ++a) {
    if (x.x(a).is_zero()) continue;
    for (int b = 0; b < sys.size(); ++b) {
      if (y.x(b).is_zero()) continue;
      Elem prod = x.x(a) * y.x(b);
      if (b == sys.negate(a)) {
        const Root& alpha = sys.root(a);
        for (int i = 0; i < sys.rank(); ++i)
          if (alpha[i]) r.h(i) += prod * ring->from_int(alpha[i]);
      } else {
        int c = t.N(a, b);
        if (c) r.x(sys.index(sys.root(a) + sys.root(b))) += prod * ring->from_int(c);
      }
    }
  }
  return r;
}

Mat ad_matrix(const StructureTable& t, const LieVector& x) {
  const RootSystem& sys = t.system();
  RingRef ring = x.ring();
  int n = sys.rank(), dim = adjoint_dim(sys);
  Mat m(ring, dim, dim);
  auto put_column = [&](int col, const LieVector& v) {
    for (int i = 0; i < n; ++i) m.at(i, col) = v.h(i);
    for (int i = 0; i < sys.size(); ++i) m.at(n + i, col) = v.x(i);
  };
  for (int j = 0; j < n; ++j) put_column(j, bracket(t, x, LieVector::H(sys, ring, j)));
  for (int j = 0; j < sys.size(); ++j)
    put_column(n + j, bracket(t, x, LieVector::X(sys, ring, j)));
  return m;
}

std::optional<LieVector> lie_vector_from_ad(const StructureTable& t, RingRef ring, const Mat& m) {
  const RootSystem& sys = t.system();
  int n = sys.rank();
  if (m.rows() != adjoint_dim(sys) || m.cols() != adjoint_dim(sys)) return std::nullopt;
  LieVector v(sys, ring);

  // root coefficients from the Cartan columns: ad(v) X -> column at H_j has
  // entry -r_alpha <alpha, alpha_j> in row X_alpha
  for (int a = 0; a < sys.size(); ++a) {
    const Root& alpha = sys.root(a);
    int bestj = -1, bestpair = 0;
    for (int j = 0; j < n; ++j) {
      int p = sys.pairing_simple(alpha, j);
      if (p == 1 || p == -1) {
        bestj = j;
        bestpair = p;
        break;
      }
      if (p != 0 && bestj < 0) {
        bestj = j;
        bestpair = p;
      }
    }
    Elem entry = m.at(n + a, bestj);
    Elem denom = ring->from_int(-bestpair);
    if (!denom.is_unit()) return std::nullopt;
    v.x(a) = entry * denom.inv();
  }

  // Cartan coefficients from the diagonal of the simple-root columns
  Mat cart(ring, n, n);
  std::vector<Elem> rhs;
  for (int j = 0; j < n; ++j) {
    std::vector<int> c(n, 0);
    c[j] = 1;
    int rootidx = sys.index(Root(c));
    rhs.push_back(m.at(n + rootidx, n + rootidx));
    for (int i = 0; i < n; ++i) cart.at(j, i) = ring->from_int(sys.cartan(j, i));
  }
  auto sol = solve_linear(cart, rhs);
  if (!sol) return std::nullopt;
  for (int i = 0; i < n; ++i) v.h(i) = (*sol)[i];

  if (ad_matrix(t, v) != m) return std::nullopt;
  return v;
}

}  // namespace tcg
