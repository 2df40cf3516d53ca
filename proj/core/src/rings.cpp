#include "tcg/rings.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace tcg {

const char* name_of(errc c) {
  switch (c) {
    case errc::no_half: return "NoHalf";
    case errc::no_third: return "NoThird";
    case errc::no_antifixed_unit: return "NoAntifixedUnit";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::not_invertible: return "NotInvertible";
    case errc::param_constraint_violated: return "ParamConstraintViolated";
    case errc::not_based_at_identity: return "NotBasedAtIdentity";
    case errc::singular_basis: return "SingularBasis";
    case errc::sign_fix_failed: return "SignFixFailed";
    case errc::unsupported_kind: return "UnsupportedKind";
    case errc::usage_error: return "UsageError";
    case errc::io_error: return "IoError";
    case errc::parse_error: return "ParseError";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// Elem

namespace {
void check_same_ring(const Elem& a, const Elem& b) {
  if (!a.valid() || !b.valid()) fail(errc::ring_mismatch, "uninitialized element");
  if (a.ring() != b.ring())
    fail(errc::ring_mismatch,
         a.ring()->descriptor() + " vs " + b.ring()->descriptor());
}
}  // namespace

bool Elem::operator==(const Elem& o) const {
  if (ring_ != o.ring_) return false;
  if (ring_ == nullptr) return true;
  return v_ == o.v_;
}

Elem operator+(const Elem& a, const Elem& b) {
  check_same_ring(a, b);
  return a.ring()->v_add(a, b);
}
Elem operator-(const Elem& a, const Elem& b) {
  check_same_ring(a, b);
  return a.ring()->v_add(a, a.ring()->v_neg(b));
}
Elem operator*(const Elem& a, const Elem& b) {
  check_same_ring(a, b);
  return a.ring()->v_mul(a, b);
}
Elem operator/(const Elem& a, const Elem& b) {
  check_same_ring(a, b);
  return a * b.inv();
}
Elem Elem::operator-() const {
  if (!valid()) fail(errc::ring_mismatch, "uninitialized element");
  return ring_->v_neg(*this);
}
Elem& Elem::operator+=(const Elem& o) { return *this = *this + o; }
Elem& Elem::operator-=(const Elem& o) { return *this = *this - o; }
Elem& Elem::operator*=(const Elem& o) { return *this = *this * o; }

bool Elem::is_zero() const { return ring_->v_is_zero(*this); }
bool Elem::is_one() const { return *this == ring_->one(); }
bool Elem::is_unit() const { return ring_->v_inv(*this).has_value(); }

Elem Elem::inv() const {
  auto r = ring_->v_inv(*this);
  if (!r) fail(errc::not_invertible, str() + " in " + ring_->descriptor());
  return *r;
}

Elem Elem::theta() const { return ring_->v_theta(*this); }

Elem Elem::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  Elem acc = ring_->one();
  Elem base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::string Elem::str() const { return valid() ? ring_->v_str(*this) : "<invalid>"; }

std::ostream& operator<<(std::ostream& os, const Elem& e) { return os << e.str(); }

// ---------------------------------------------------------------------------
// printing helpers

namespace {

bool atomic_str(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') return false;
  return true;
}

struct Term {
  std::string coeff;  // never "0"
  std::string mono;   // "" for the constant term
};

std::string join_terms(const std::vector<Term>& ts) {
  if (ts.empty()) return "0";
  std::string out;
  for (const auto& t : ts) {
    std::string piece;
    if (t.mono.empty()) {
      piece = t.coeff;
    } else if (t.coeff == "1") {
      piece = t.mono;
    } else if (t.coeff == "-1") {
      piece = "-" + t.mono;
    } else if (atomic_str(t.coeff)) {
      piece = t.coeff + t.mono;
    } else {
      piece = "(" + t.coeff + ")" + t.mono;
    }
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += "-" + piece.substr(1);
    } else {
      out += "+" + piece;
    }
  }
  return out;
}

std::string power_str(const std::string& sym, int e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return sym + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring base

void Ring::init_flags() {
  has_half_ = from_int(2).is_unit();
  has_third_ = from_int(3).is_unit();
}

Elem Ring::theta(const Elem& x) const {
  if (x.ring() != this) fail(errc::ring_mismatch, "theta: foreign element");
  return v_theta(x);
}

std::pair<Elem, Elem> Ring::split_fixed_antifixed(const Elem& x) const {
  if (x.ring() != this) fail(errc::ring_mismatch, "split: foreign element");
  if (!has_half_) fail(errc::no_half, descriptor());
  Elem half = from_int(2).inv();
  Elem tx = v_theta(x);
  return {(x + tx) * half, (x - tx) * half};
}

Elem Ring::antifixed_unit() const {
  auto a = v_antifixed_unit();
  if (!a) fail(errc::no_antifixed_unit, descriptor());
  return *a;
}

Elem Ring::generator() const {
  auto g = v_generator();
  if (!g) fail(errc::unsupported_kind, descriptor() + " has no generator symbol");
  return *g;
}

Elem Ring::sample(std::mt19937_64& rng) const { return v_sample(rng); }

// ---------------------------------------------------------------------------
// Rationals

class RationalsRing final : public Ring {
public:
  RationalsRing() {
    kind_ = Kind::rationals;
    desc_ = "rationals";
    char_ = 0;
    init_flags();
  }

  Elem from_int(long v) const override { return Elem(this, mpq_class(v)); }

  Elem v_add(const Elem& a, const Elem& b) const override {
    return Elem(this, mpq_class(q(a) + q(b)));
  }
  Elem v_neg(const Elem& a) const override { return Elem(this, mpq_class(-q(a))); }
  Elem v_mul(const Elem& a, const Elem& b) const override {
    return Elem(this, mpq_class(q(a) * q(b)));
  }
  bool v_is_zero(const Elem& a) const override { return q(a) == 0; }
  std::optional<Elem> v_inv(const Elem& a) const override {
    if (q(a) == 0) return std::nullopt;
    return Elem(this, mpq_class(1 / q(a)));
  }
  Elem v_theta(const Elem& a) const override { return a; }
  std::string v_str(const Elem& a) const override { return q(a).get_str(); }
  Elem v_sample(std::mt19937_64& rng) const override {
    static const long dens[] = {1, 1, 2, 3, 6};
    mpq_class r(rnd_range(rng, -9, 9), dens[rnd_below(rng, 5)]);
    r.canonicalize();
    return Elem(this, r);
  }
  std::optional<Elem> v_antifixed_unit() const override { return std::nullopt; }

  static const mpq_class& q(const Elem& a) { return std::get<mpq_class>(a.payload()); }
};

// ---------------------------------------------------------------------------
// Quadratic extension base[a]/(a^2-d), theta(a) = -a

class QuadRing final : public Ring {
public:
  QuadRing(RingRef base, Elem d, std::string sym, std::string desc_override)
      : base_(base), d_(std::move(d)), sym_(std::move(sym)) {
    kind_ = Kind::quad;
    char_ = base->characteristic();
    if (!desc_override.empty()) {
      desc_ = desc_override;
    } else {
      desc_ = "quad(" + base_->descriptor() + "," + d_.str() +
              (sym_ == "a" ? "" : "," + sym_) + ")";
    }
    init_flags();
  }

  RingRef base() const override { return base_; }

  Elem from_int(long v) const override {
    return mk(base_->from_int(v), base_->zero());
  }
  Elem wrap(const Elem& b) const { return mk(b, base_->zero()); }

  Elem v_add(const Elem& x, const Elem& y) const override {
    return mk(u(x) + u(y), v(x) + v(y));
  }
  Elem v_neg(const Elem& x) const override { return mk(-u(x), -v(x)); }
  Elem v_mul(const Elem& x, const Elem& y) const override {
    return mk(u(x) * u(y) + d_ * v(x) * v(y), u(x) * v(y) + v(x) * u(y));
  }
  bool v_is_zero(const Elem& x) const override { return u(x).is_zero() && v(x).is_zero(); }
  std::optional<Elem> v_inv(const Elem& x) const override {
    // (u+va)^-1 = (u-va)/(u^2 - d v^2)
    Elem n = u(x) * u(x) - d_ * v(x) * v(x);
    auto ninv = n.ring()->v_inv(n);
    if (!ninv) return std::nullopt;
    return mk(u(x) * *ninv, -(v(x) * *ninv));
  }
  Elem v_theta(const Elem& x) const override {
    return mk(u(x).theta(), -(v(x).theta()));
  }
  std::string v_str(const Elem& x) const override {
    std::vector<Term> ts;
    if (!u(x).is_zero()) ts.push_back({u(x).str(), ""});
    if (!v(x).is_zero()) ts.push_back({v(x).str(), sym_});
    return join_terms(ts);
  }
  Elem v_sample(std::mt19937_64& rng) const override {
    return mk(base_->sample(rng), base_->sample(rng));
  }
  std::optional<Elem> v_antifixed_unit() const override {
    if (!d_.is_unit()) return std::nullopt;
    return v_generator();
  }
  std::optional<Elem> v_generator() const override {
    return mk(base_->zero(), base_->one());
  }
  const std::string& symbol() const { return sym_; }

private:
  Elem mk(Elem a, Elem b) const {
    Elem::Vec w;
    w.reserve(2);
    w.push_back(std::move(a));
    w.push_back(std::move(b));
    return Elem(this, std::move(w));
  }
  static const Elem& u(const Elem& x) { return std::get<Elem::Vec>(x.payload())[0]; }
  static const Elem& v(const Elem& x) { return std::get<Elem::Vec>(x.payload())[1]; }

  RingRef base_;
  Elem d_;
  std::string sym_;
};

// ---------------------------------------------------------------------------
// F_{p^(2k)} with theta = Frobenius x -> x^(p^k)

namespace ffpoly {

using V = std::vector<std::int64_t>;

V trim(V a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

V mul_mod(const V& a, const V& b, const V& f, long p) {
  // f monic of degree d; a, b of degree < d
  long d = static_cast<long>(f.size()) - 1;
  V r(2 * d - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  for (long i = 2 * d - 2; i >= d; --i) {
    std::int64_t c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (long j = 0; j < d; ++j)
      r[i - d + j] = ((r[i - d + j] - c * f[j]) % p + p) % p;
  }
  r.resize(d);
  return r;
}

V pow_mod(V x, unsigned long long e, const V& f, long p) {
  long d = static_cast<long>(f.size()) - 1;
  V acc(d, 0);
  acc[0] = 1;
  while (e) {
    if (e & 1ULL) acc = mul_mod(acc, x, f, p);
    x = mul_mod(x, x, f, p);
    e >>= 1ULL;
  }
  return acc;
}

V poly_mod(V a, const V& m, long p) {
  // reduce a modulo arbitrary (not necessarily monic) m
  a = trim(a);
  V mm = trim(m);
  if (mm.empty()) return a;
  // make m monic
  std::int64_t lead = mm.back();
  std::int64_t linv = 1;
  for (long t = 1; t < p; ++t)
    if (lead * t % p == 1) { linv = t; break; }
  for (auto& c : mm) c = c * linv % p;
  while (a.size() >= mm.size()) {
    std::int64_t c = a.back();
    if (c) {
      std::size_t off = a.size() - mm.size();
      for (std::size_t j = 0; j < mm.size(); ++j)
        a[off + j] = ((a[off + j] - c * mm[j]) % p + p) % p;
    }
    a.pop_back();
    a = trim(a);
    if (a.size() < mm.size()) break;
  }
  return trim(a);
}

V gcd(V a, V b, long p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    V r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const V& f, long p) {
  long d = static_cast<long>(f.size()) - 1;
  V x = {0, 1};
  // x^(p^i) mod f, iterated
  V fr = x;
  std::vector<V> frob(d + 1);
  frob[0] = x;
  for (long i = 1; i <= d; ++i) {
    fr = pow_mod(fr, static_cast<unsigned long long>(p), f, p);
    frob[i] = fr;
  }
  V diff = frob[d];
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  if (!trim(diff).empty()) return false;  // x^(p^d) != x
  for (long r = 2; r <= d; ++r) {
    if (d % r) continue;
    bool prime = true;
    for (long s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    V g = frob[d / r];
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    V gg = gcd(trim(g), f, p);
    if (gg.size() > 1) return false;
  }
  return true;
}

}  // namespace ffpoly

class FiniteFieldRing final : public Ring {
public:
  FiniteFieldRing(long p, long k) : p_(p), k_(k), d_(2 * k) {
    if (p < 2 || k < 1) fail(errc::usage_error, "gf(p,k): need p prime, k >= 1");
    for (long s = 2; s * s <= p; ++s)
      if (p % s == 0) fail(errc::usage_error, "gf(p,k): p must be prime");
    double qd = std::pow(static_cast<double>(p), static_cast<double>(d_));
    if (qd > (1 << 20)) fail(errc::usage_error, "gf(p,k): field too large");
    q_ = 1;
    for (long i = 0; i < d_; ++i) q_ *= p;
    theta_exp_ = 1;
    for (long i = 0; i < k_; ++i) theta_exp_ *= p;
    kind_ = Kind::finite_field;
    desc_ = "gf(" + std::to_string(p) + "," + std::to_string(k) + ")";
    char_ = p;
    choose_modulus();
    find_antifixed();
    init_flags();
  }

  long ff_p() const override { return p_; }
  long ff_k() const override { return k_; }
  long ff_q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  Elem from_int(long v) const override {
    Elem::FFVec c(d_, 0);
    c[0] = ((v % p_) + p_) % p_;
    return Elem(this, std::move(c));
  }

  Elem v_add(const Elem& a, const Elem& b) const override {
    Elem::FFVec r(d_);
    for (long i = 0; i < d_; ++i) r[i] = (cv(a)[i] + cv(b)[i]) % p_;
    return Elem(this, std::move(r));
  }
  Elem v_neg(const Elem& a) const override {
    Elem::FFVec r(d_);
    for (long i = 0; i < d_; ++i) r[i] = (p_ - cv(a)[i]) % p_;
    return Elem(this, std::move(r));
  }
  Elem v_mul(const Elem& a, const Elem& b) const override {
    return Elem(this, ffpoly::mul_mod(cv(a), cv(b), modulus_, p_));
  }
  bool v_is_zero(const Elem& a) const override {
    for (auto c : cv(a))
      if (c) return false;
    return true;
  }
  std::optional<Elem> v_inv(const Elem& a) const override {
    if (v_is_zero(a)) return std::nullopt;
    return Elem(this, ffpoly::pow_mod(cv(a), static_cast<unsigned long long>(q_ - 2),
                                      modulus_, p_));
  }
  Elem v_theta(const Elem& a) const override {
    return Elem(this, ffpoly::pow_mod(cv(a), static_cast<unsigned long long>(theta_exp_),
                                      modulus_, p_));
  }
  std::string v_str(const Elem& a) const override {
    std::vector<Term> ts;
    for (long i = d_ - 1; i >= 0; --i)
      if (cv(a)[i])
        ts.push_back({std::to_string(cv(a)[i]), power_str("g", static_cast<int>(i))});
    return join_terms(ts);
  }
  Elem v_sample(std::mt19937_64& rng) const override {
    Elem::FFVec r(d_);
    for (long i = 0; i < d_; ++i) r[i] = static_cast<std::int64_t>(rnd_below(rng, p_));
    return Elem(this, std::move(r));
  }
  std::optional<Elem> v_antifixed_unit() const override { return antifixed_; }
  std::optional<Elem> v_generator() const override {
    Elem::FFVec x(d_, 0);
    x[1] = 1;
    return Elem(this, std::move(x));
  }

private:
  // mul_mod requires vectors of length d; normalize internal representation
  Elem::FFVec pad(ffpoly::V v) const {
    v.resize(d_, 0);
    return v;
  }

  void choose_modulus() {
    // lexicographically first (by low-coefficient integer code) monic
    // irreducible of degree d whose root g = x generates the unit group
    std::vector<long> primes;
    long m = q_ - 1;
    for (long s = 2; s * s <= m; ++s)
      if (m % s == 0) {
        primes.push_back(s);
        while (m % s == 0) m /= s;
      }
    if (m > 1) primes.push_back(m);

    for (long code = 0; code < q_; ++code) {
      ffpoly::V f(d_ + 1, 0);
      long c = code;
      for (long i = 0; i < d_; ++i) {
        f[i] = c % p_;
        c /= p_;
      }
      f[d_] = 1;
      if (!ffpoly::is_irreducible(f, p_)) continue;
      // primitivity of x
      bool prim = true;
      for (long ell : primes) {
        auto e = static_cast<unsigned long long>((q_ - 1) / ell);
        ffpoly::V r = ffpoly::pow_mod({0, 1}, e, f, p_);
        r = ffpoly::trim(std::move(r));
        if (r.size() == 1 && r[0] == 1) {
          prim = false;
          break;
        }
      }
      if (!prim) continue;
      modulus_ = f;
      return;
    }
    fail(errc::usage_error, "gf(p,k): no primitive modulus found");
  }

  void find_antifixed() {
    // least power of g with theta(a) = -a
    Elem g = *v_generator();
    Elem a = g;
    for (long j = 1; j <= q_ - 1; ++j) {
      if (v_theta(a) == v_neg(a) && !v_is_zero(a)) {
        antifixed_ = a;
        return;
      }
      a = v_mul(a, g);
    }
  }

  static const Elem::FFVec& cv(const Elem& a) { return std::get<Elem::FFVec>(a.payload()); }

  long p_, k_, d_, q_, theta_exp_;
  std::vector<std::int64_t> modulus_;
  std::optional<Elem> antifixed_;
};

// ---------------------------------------------------------------------------
// Polynomials base[t] and truncations base[t]/(t^k); theta acts on coefficients

class PolyLikeRing : public Ring {
public:
  PolyLikeRing(RingRef base, int bound, std::string sym)
      : base_(base), bound_(bound), sym_(std::move(sym)) {}

  RingRef base() const override { return base_; }
  int trunc_bound() const override { return bound_; }

  Elem from_int(long v) const override {
    Elem::Vec c;
    c.push_back(base_->from_int(v));
    return mk(std::move(c));
  }
  Elem wrap(const Elem& b) const {
    Elem::Vec c;
    c.push_back(b);
    return mk(std::move(c));
  }

  Elem v_add(const Elem& a, const Elem& b) const override {
    const auto& x = cv(a);
    const auto& y = cv(b);
    Elem::Vec r(std::max(x.size(), y.size()), base_->zero());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
    return mk(std::move(r));
  }
  Elem v_neg(const Elem& a) const override {
    Elem::Vec r = cv(a);
    for (auto& c : r) c = -c;
    return mk(std::move(r));
  }
  Elem v_mul(const Elem& a, const Elem& b) const override {
    const auto& x = cv(a);
    const auto& y = cv(b);
    if (x.empty() || y.empty()) return Elem(this, Elem::Vec{});
    std::size_t n = x.size() + y.size() - 1;
    if (bound_ > 0) n = std::min(n, static_cast<std::size_t>(bound_));
    Elem::Vec r(n, base_->zero());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size() && i + j < n; ++j) r[i + j] += x[i] * y[j];
    }
    return mk(std::move(r));
  }
  bool v_is_zero(const Elem& a) const override { return cv(a).empty(); }
  std::optional<Elem> v_inv(const Elem& a) const override {
    const auto& x = cv(a);
    if (bound_ < 0) {
      // poly ring: invertible constants only
      if (x.size() != 1) return std::nullopt;
      auto c = base_->v_inv(x[0]);
      if (!c) return std::nullopt;
      return wrap(*c);
    }
    // truncated power series: unit iff constant coefficient is a unit
    if (x.empty()) return std::nullopt;
    auto c0 = base_->v_inv(x[0]);
    if (!c0) return std::nullopt;
    Elem::Vec b(bound_, base_->zero());
    b[0] = *c0;
    for (int n = 1; n < bound_; ++n) {
      Elem s = base_->zero();
      for (int j = 1; j <= n; ++j) {
        const Elem& cj = (static_cast<std::size_t>(j) < x.size()) ? x[j] : base_->zero();
        if (!cj.is_zero()) s += cj * b[n - j];
      }
      b[n] = -(*c0 * s);
    }
    return mk(std::move(b));
  }
  Elem v_theta(const Elem& a) const override {
    Elem::Vec r = cv(a);
    for (auto& c : r) c = c.theta();
    return mk(std::move(r));
  }
  std::string v_str(const Elem& a) const override {
    std::vector<Term> ts;
    const auto& x = cv(a);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero())
        ts.push_back({x[i].str(), power_str(sym_, static_cast<int>(i))});
    return join_terms(ts);
  }
  Elem v_sample(std::mt19937_64& rng) const override {
    int deg = static_cast<int>(rnd_below(rng, bound_ > 0 ? bound_ : 3));
    Elem::Vec r;
    for (int i = 0; i <= deg; ++i) r.push_back(base_->sample(rng));
    return mk(std::move(r));
  }
  std::optional<Elem> v_antifixed_unit() const override {
    auto a = base_->v_antifixed_unit();
    if (!a) return std::nullopt;
    return wrap(*a);
  }
  std::optional<Elem> v_generator() const override {
    if (bound_ == 1) return std::nullopt;  // t == 0 there
    Elem::Vec c;
    c.push_back(base_->zero());
    c.push_back(base_->one());
    return mk(std::move(c));
  }
  const std::string& symbol() const { return sym_; }

protected:
  Elem mk(Elem::Vec v) const {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    if (bound_ > 0 && v.size() > static_cast<std::size_t>(bound_))
      v.resize(bound_, base_->zero());
    return Elem(this, std::move(v));
  }
  static const Elem::Vec& cv(const Elem& a) { return std::get<Elem::Vec>(a.payload()); }

  RingRef base_;
  int bound_;  // -1 for poly, k >= 1 for trunc
  std::string sym_;
};

class PolyRing final : public PolyLikeRing {
public:
  PolyRing(RingRef base, std::string sym) : PolyLikeRing(base, -1, std::move(sym)) {
    kind_ = Kind::poly;
    char_ = base->characteristic();
    desc_ = "poly(" + base->descriptor() + (sym_ == "t" ? "" : "," + sym_) + ")";
    init_flags();
  }
};

class TruncRing final : public PolyLikeRing {
public:
  TruncRing(RingRef base, int k, std::string sym)
      : PolyLikeRing(base, k, std::move(sym)) {
    if (k < 1) fail(errc::usage_error, "trunc(base,k): need k >= 1");
    kind_ = Kind::trunc;
    char_ = base->characteristic();
    desc_ = "trunc(" + base->descriptor() + "," + std::to_string(k) +
            (sym_ == "t" ? "" : "," + sym_) + ")";
    init_flags();
  }
};

// ---------------------------------------------------------------------------
// interning + descriptor parsing

namespace {

std::map<std::string, const Ring*>& registry() {
  static std::map<std::string, const Ring*> reg;
  return reg;
}
std::recursive_mutex& registry_mutex() {
  static std::recursive_mutex mu;
  return mu;
}

template <class Make>
RingRef intern(const std::string& desc, Make make_fn) {
  std::lock_guard<std::recursive_mutex> lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(desc);
  if (it != reg.end()) return it->second;
  const Ring* r = make_fn();
  reg.emplace(r->descriptor(), r);
  if (r->descriptor() != desc) reg.emplace(desc, r);
  return r;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// split "head(args)" at top level commas
bool split_call(const std::string& s, std::string& head, std::vector<std::string>& args) {
  auto lp = s.find('(');
  if (lp == std::string::npos) return false;
  if (s.back() != ')') return false;
  head = strip(s.substr(0, lp));
  int depth = 0;
  std::string cur;
  for (std::size_t i = lp + 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      args.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  args.push_back(strip(cur));
  return true;
}

long parse_long(const std::string& s) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) fail(errc::parse_error, "bad integer: " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(errc::parse_error, "bad integer: " + s);
  }
}

}  // namespace

RingRef Ring::rationals() {
  return intern("rationals", [] { return new RationalsRing(); });
}

RingRef Ring::gaussian_rationals() {
  RingRef q = rationals();
  return intern("gaussian-rationals", [q] {
    return new QuadRing(q, q->from_int(-1), "i", "gaussian-rationals");
  });
}

RingRef Ring::gf(long p, long k) {
  std::string d = "gf(" + std::to_string(p) + "," + std::to_string(k) + ")";
  return intern(d, [=] { return new FiniteFieldRing(p, k); });
}

RingRef Ring::quad(RingRef base, long d, const std::string& symbol) {
  Elem dd = base->from_int(d);
  std::string desc = "quad(" + base->descriptor() + "," + dd.str() +
                     (symbol == "a" ? "" : "," + symbol) + ")";
  return intern(desc, [=] { return new QuadRing(base, dd, symbol, ""); });
}

RingRef Ring::poly(RingRef base, const std::string& symbol) {
  std::string desc = "poly(" + base->descriptor() + (symbol == "t" ? "" : "," + symbol) + ")";
  return intern(desc, [=] { return new PolyRing(base, symbol); });
}

RingRef Ring::trunc(RingRef base, int k, const std::string& symbol) {
  std::string desc = "trunc(" + base->descriptor() + "," + std::to_string(k) +
                     (symbol == "t" ? "" : "," + symbol) + ")";
  return intern(desc, [=] { return new TruncRing(base, k, symbol); });
}

RingRef Ring::make(const std::string& descriptor) {
  std::string s = strip(descriptor);
  if (s == "rationals") return rationals();
  if (s == "gaussian-rationals") return gaussian_rationals();
  std::string head;
  std::vector<std::string> args;
  if (!split_call(s, head, args))
    fail(errc::usage_error, "unknown ring descriptor: " + s);
  if (head == "gf") {
    if (args.size() != 2) fail(errc::usage_error, "gf(p,k) takes two arguments");
    return gf(parse_long(args[0]), parse_long(args[1]));
  }
  if (head == "quad") {
    if (args.size() < 2 || args.size() > 3)
      fail(errc::usage_error, "quad(base,d[,sym]) takes two or three arguments");
    RingRef b = make(args[0]);
    std::string sym = args.size() == 3 ? args[2] : "a";
    Elem d = b->parse(args[1]);
    std::string desc =
        "quad(" + b->descriptor() + "," + d.str() + (sym == "a" ? "" : "," + sym) + ")";
    return intern(desc, [=] { return new QuadRing(b, d, sym, ""); });
  }
  if (head == "poly") {
    if (args.size() < 1 || args.size() > 2)
      fail(errc::usage_error, "poly(base[,sym]) takes one or two arguments");
    return poly(make(args[0]), args.size() == 2 ? args[1] : "t");
  }
  if (head == "trunc") {
    if (args.size() < 2 || args.size() > 3)
      fail(errc::usage_error, "trunc(base,k[,sym]) takes two or three arguments");
    return trunc(make(args[0]), static_cast<int>(parse_long(args[1])),
                 args.size() == 3 ? args[2] : "t");
  }
  fail(errc::usage_error, "unknown ring descriptor: " + s);
}

// ---------------------------------------------------------------------------
// lifting

Elem Ring::lift(const Elem& x) const {
  if (x.ring() == this) return x;
  RingRef b = base();
  if (b == nullptr)
    fail(errc::ring_mismatch,
         "cannot lift " + (x.valid() ? x.ring()->descriptor() : std::string("<invalid>")) +
             " into " + descriptor());
  Elem y = b->lift(x);
  switch (kind_) {
    case Kind::quad:
      return static_cast<const QuadRing*>(this)->wrap(y);
    case Kind::poly:
    case Kind::trunc:
      if (y.is_zero()) return zero();
      return static_cast<const PolyLikeRing*>(this)->wrap(y);
    default:
      fail(errc::ring_mismatch, "lift unsupported for " + descriptor());
  }
}

// ---------------------------------------------------------------------------
// element expression parser

namespace {

struct ExprParser {
  const Ring* ring;
  std::string src;
  std::size_t pos = 0;
  std::vector<std::pair<std::string, Elem>> syms;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Elem parse() {
    Elem e = expr();
    skip_ws();
    if (pos != src.size())
      fail(errc::parse_error, "trailing input in element expression: " + src);
    return e;
  }

  Elem expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Elem acc = term();
    if (neg) acc = -acc;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc += term();
      } else if (c == '-') {
        ++pos;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Elem term() {
    Elem acc = powfactor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc *= powfactor();
      } else if (c == '/') {
        ++pos;
        acc = acc / powfactor();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
        acc *= powfactor();  // implicit multiplication, e.g. "2i" or "(1+i)t"
      } else {
        break;
      }
    }
    return acc;
  }

  Elem powfactor() {
    Elem b = atom();
    if (peek() == '^') {
      ++pos;
      bool neg = eat('-');
      std::string digits = read_digits();
      if (digits.empty()) fail(errc::parse_error, "expected exponent after ^");
      long e = parse_long(digits);
      b = b.pow(neg ? -e : e);
    }
    return b;
  }

  Elem atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Elem e = expr();
      if (!eat(')')) fail(errc::parse_error, "missing ')' in element expression");
      return e;
    }
    if (c == '-') {
      ++pos;
      return -powfactor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return ring->from_int(parse_long(read_digits()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = read_word();
      for (const auto& [n, v] : syms)
        if (n == name) return v;
      fail(errc::parse_error, "unknown symbol '" + name + "' in " + ring->descriptor());
    }
    fail(errc::parse_error, "unexpected character in element expression: " + src);
  }

  std::string read_digits() {
    skip_ws();
    std::string out;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      out += src[pos++];
    return out;
  }
  std::string read_word() {
    skip_ws();
    std::string out;
    while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos])))
      out += src[pos++];
    return out;
  }
};

void collect_symbols(const Ring* top, const Ring* r,
                     std::vector<std::pair<std::string, Elem>>& out) {
  auto add = [&](const std::string& name, const Elem& e) {
    for (const auto& [n, v] : out)
      if (n == name) return;  // outermost binding wins
    out.emplace_back(name, top->lift(e));
  };
  switch (r->kind()) {
    case Ring::Kind::quad:
      add(static_cast<const QuadRing*>(r)->symbol(), r->generator());
      break;
    case Ring::Kind::finite_field:
      add("g", r->generator());
      break;
    case Ring::Kind::poly:
    case Ring::Kind::trunc:
      if (r->v_generator())
        add(static_cast<const PolyLikeRing*>(r)->symbol(), r->generator());
      break;
    case Ring::Kind::rationals:
      break;
  }
  if (r->base()) collect_symbols(top, r->base(), out);
}

}  // namespace

Elem Ring::parse(const std::string& text) const {
  ExprParser p;
  p.ring = this;
  p.src = text;
  collect_symbols(this, this, p.syms);
  return p.parse();
}

}  // namespace tcg
