#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tcg/errors.hpp"

namespace tcg {

class Ring;
// Rings are interned and immutable; plain pointers stay valid for the process
// lifetime and compare equal iff the descriptors match.
using RingRef = const Ring*;

/// Element of an involutive ring. Value type with exact, canonical payload;
/// equality is decidable by payload comparison.
class Elem {
public:
  Elem() : ring_(nullptr) {}

  RingRef ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }

  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }

  Elem operator-() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  Elem inv() const;          // throws not_invertible
  Elem theta() const;        // the ring involution
  Elem pow(long n) const;    // negative exponents require a unit
  std::string str() const;

  using FFVec = std::vector<std::int64_t>;
  using Vec = std::vector<Elem>;
  using Payload = std::variant<mpq_class, FFVec, Vec>;

  Elem(RingRef r, Payload p) : ring_(r), v_(std::move(p)) {}
  const Payload& payload() const { return v_; }

private:
  RingRef ring_;
  Payload v_;
};

Elem operator+(const Elem& a, const Elem& b);
Elem operator-(const Elem& a, const Elem& b);
Elem operator*(const Elem& a, const Elem& b);
Elem operator/(const Elem& a, const Elem& b);
std::ostream& operator<<(std::ostream& os, const Elem& e);

/// A commutative ring with unity carrying an order-2 automorphism theta.
///
/// Supported descriptors:
///   rationals                   Q, theta = id
///   gaussian-rationals          Q(i), theta = complex conjugation
///   gf(p,k)                     F_{p^(2k)}, theta = Frobenius x -> x^(p^k)
///   quad(base,d)                base[a]/(a^2-d), theta(a) = -a
///   poly(base)                  base[t], theta(t) = t
///   trunc(base,k)               base[t]/(t^k)
/// poly/trunc/quad accept an optional trailing symbol argument, e.g.
/// trunc(rationals,3,u), so nested towers can use distinct variable names.
class Ring {
public:
  enum class Kind { rationals, quad, finite_field, poly, trunc };

  virtual ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  /// Parse a descriptor string and return the interned ring.
  static RingRef make(const std::string& descriptor);
  static RingRef rationals();
  static RingRef gaussian_rationals();
  static RingRef gf(long p, long k);
  static RingRef quad(RingRef base, long d, const std::string& symbol = "a");
  static RingRef poly(RingRef base, const std::string& symbol = "t");
  static RingRef trunc(RingRef base, int k, const std::string& symbol = "t");

  Kind kind() const { return kind_; }
  const std::string& descriptor() const { return desc_; }
  long characteristic() const { return char_; }
  bool has_half() const { return has_half_; }
  bool has_third() const { return has_third_; }

  Elem zero() const { return from_int(0); }
  Elem one() const { return from_int(1); }
  virtual Elem from_int(long v) const = 0;

  /// theta(x); an involutive ring homomorphism.
  Elem theta(const Elem& x) const;

  /// x = u + v with theta(u) = u and theta(v) = -v. Requires 1/2.
  std::pair<Elem, Elem> split_fixed_antifixed(const Elem& x) const;

  bool is_fixed(const Elem& x) const { return theta(x) == x; }
  bool is_antifixed(const Elem& x) const { return theta(x) == -x; }

  /// The canonical invertible a with theta(a) = -a; throws no_antifixed_unit.
  Elem antifixed_unit() const;

  /// The distinguished non-rational generator (i, a, g or t).
  Elem generator() const;

  /// Lift an element of a ring lower in this tower into this ring.
  Elem lift(const Elem& x) const;

  /// Parse an element expression, e.g. "3+2i", "1/2", "g^3", "(1+i)t^2".
  Elem parse(const std::string& text) const;

  /// Small random element (exercises denominators/coefficients); deterministic
  /// for a given generator state.
  Elem sample(std::mt19937_64& rng) const;

  virtual RingRef base() const { return nullptr; }
  virtual int trunc_bound() const { return -1; }
  virtual long ff_p() const { return 0; }
  virtual long ff_k() const { return 0; }

  // payload-level operations; callers guarantee matching rings
  virtual Elem v_add(const Elem& a, const Elem& b) const = 0;
  virtual Elem v_neg(const Elem& a) const = 0;
  virtual Elem v_mul(const Elem& a, const Elem& b) const = 0;
  virtual bool v_is_zero(const Elem& a) const = 0;
  virtual std::optional<Elem> v_inv(const Elem& a) const = 0;
  virtual Elem v_theta(const Elem& a) const = 0;
  virtual std::string v_str(const Elem& a) const = 0;
  virtual Elem v_sample(std::mt19937_64& rng) const = 0;
  virtual std::optional<Elem> v_antifixed_unit() const = 0;
  virtual std::optional<Elem> v_generator() const { return std::nullopt; }

protected:
  Ring() = default;
  void init_flags();  // characteristic-dependent unit flags

  Kind kind_{};
  std::string desc_;
  long char_ = 0;
  bool has_half_ = false;
  bool has_third_ = false;
};

/// Uniform integer in [0, n); avoids distribution portability pitfalls.
inline std::uint64_t rnd_below(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}
inline long rnd_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rnd_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace tcg
