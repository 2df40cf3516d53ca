#include "tcg/roots.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace tcg {

Root Root::operator-() const {
  std::vector<int> c(c_);
  for (auto& x : c) x = -x;
  return Root(std::move(c));
}

Root Root::operator+(const Root& o) const {
  std::vector<int> c(c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return Root(std::move(c));
}

int Root::height() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool Root::is_positive() const {
  bool nonzero = false;
  for (int x : c_) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

std::string Root::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c_[i]);
  }
  return out;
}

Root Root::parse(const std::string& text) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      c.push_back(std::stoi(tok));
    } catch (...) {
      fail(errc::parse_error, "bad root coordinate: " + tok);
    }
  }
  if (c.empty()) fail(errc::parse_error, "empty root");
  return Root(std::move(c));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> cartan_matrix(Family f, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Family::E6:
      // Bourbaki: chain 1-3-4-5-6 with 2 attached to 4 (0-based: 0-2-3-4-5, 1~3)
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      edge(1, 3);
      break;
  }
  return a;
}

}  // namespace

RootSystem::RootSystem(Family f, int n) : family_(f), rank_(n) {
  switch (f) {
    case Family::A:
      if (n < 2) fail(errc::unsupported_kind, "A(n) requires n >= 2");
      name_ = "A" + std::to_string(n);
      break;
    case Family::D:
      if (n < 4) fail(errc::unsupported_kind, "D(n) requires n >= 4");
      name_ = "D" + std::to_string(n);
      break;
    case Family::E6:
      rank_ = n = 6;
      name_ = "E6";
      break;
  }
  cartan_ = cartan_matrix(f, rank_);
  build();
}

void RootSystem::build() {
  // close the simple roots under simple reflections
  std::set<std::vector<int>> seen;
  std::vector<Root> work;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> c(rank_, 0);
    c[i] = 1;
    seen.insert(c);
    seen.insert(Root(c).operator-().coords());
    work.emplace_back(c);
    work.push_back(-Root(c));
  }
  for (std::size_t w = 0; w < work.size(); ++w) {
    Root beta = work[w];
    for (int i = 0; i < rank_; ++i) {
      int pair = pairing_simple(beta, i);
      if (pair == 0) continue;
      std::vector<int> c = beta.coords();
      c[i] -= pair;
      if (seen.insert(c).second) work.emplace_back(c);
    }
  }
  roots_.assign(work.begin(), work.end());
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    bool na = !a.is_positive(), nb = !b.is_positive();
    if (na != nb) return nb;
    return a.coords() < b.coords();
  });
  neg_.resize(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) neg_[i] = index(-roots_[i]);
}

int RootSystem::index(const Root& r) const {
  auto cmp = [](const Root& a, const Root& b) {
    bool na = !a.is_positive(), nb = !b.is_positive();
    if (na != nb) return nb;
    return a.coords() < b.coords();
  };
  auto it = std::lower_bound(roots_.begin(), roots_.end(), r, cmp);
  if (it == roots_.end() || !(*it == r)) return -1;
  return static_cast<int>(it - roots_.begin());
}

int RootSystem::pairing_simple(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += beta[j] * cartan_[j][i];
  return s;
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += alpha[i] * pairing_simple(beta, i);
  return s;
}

Root RootSystem::reflect(const Root& alpha, const Root& beta) const {
  int pair = pairing(beta, alpha);
  std::vector<int> c = beta.coords();
  for (int i = 0; i < rank_; ++i) c[i] -= pair * alpha[i];
  return Root(std::move(c));
}

const RootSystem& RootSystem::get(Family f, int n) {
  static std::map<std::pair<Family, int>, const RootSystem*> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (f == Family::E6) n = 6;
  auto key = std::make_pair(f, n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  const RootSystem* sys = new RootSystem(f, n);
  cache.emplace(key, sys);
  return *sys;
}

const RootSystem& RootSystem::get(const std::string& kind) {
  if (kind == "E6" || kind == "e6") return get(Family::E6, 6);
  if (kind.size() >= 2 && (kind[0] == 'A' || kind[0] == 'a' || kind[0] == 'D' || kind[0] == 'd')) {
    int n = 0;
    try {
      n = std::stoi(kind.substr(1));
    } catch (...) {
      fail(errc::unsupported_kind, "bad root system: " + kind);
    }
    Family f = (kind[0] == 'A' || kind[0] == 'a') ? Family::A : Family::D;
    if (f == Family::A && (n < 2 || n > 9))
      fail(errc::unsupported_kind, "supported: A2..A9, D4..D9, E6 (got " + kind + ")");
    if (f == Family::D && (n < 4 || n > 9))
      fail(errc::unsupported_kind, "supported: A2..A9, D4..D9, E6 (got " + kind + ")");
    return get(f, n);
  }
  fail(errc::unsupported_kind, "bad root system: " + kind);
}

// ---------------------------------------------------------------------------

Root DiagramPerm::apply(const Root& r) const {
  std::vector<int> c(r.rank(), 0);
  for (int i = 0; i < r.rank(); ++i) c[perm[i]] = r[i];
  return Root(std::move(c));
}

bool DiagramPerm::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

DiagramPerm standard_rho(const RootSystem& sys) {
  int n = sys.rank();
  std::vector<int> p(n);
  switch (sys.family()) {
    case Family::A:
      for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) p[i] = i;
      std::swap(p[n - 2], p[n - 1]);
      break;
    case Family::E6:
      p = {5, 1, 4, 3, 2, 0};
      break;
  }
  return DiagramPerm{std::move(p)};
}

const char* name_of(ClassKind k) {
  switch (k) {
    case ClassKind::A1: return "A1";
    case ClassKind::A1Sq: return "A1^2";
    case ClassKind::A2: return "A2";
  }
  return "?";
}

std::vector<TwistedClass> classify_orbits(const RootSystem& sys, const DiagramPerm& rho) {
  std::vector<bool> used(sys.size(), false);
  std::vector<TwistedClass> positives;
  // scan positive roots in order; the representative of each class is then the
  // lexicographically least positive member
  for (int i = 0; i < sys.num_positive(); ++i) {
    if (used[i]) continue;
    const Root& alpha = sys.root(i);
    Root bar = rho.apply(alpha);
    int j = sys.index(bar);
    TwistedClass cls;
    cls.rep = i;
    cls.negative = false;
    if (j == i) {
      // rho-fixed: either its own A1 class or the middle of an A2 class,
      // claimed when the wing pair is scanned
      bool middle = false;
      for (int m = 0; m < sys.num_positive() && !middle; ++m) {
        if (m == i) continue;
        const Root& w = sys.root(m);
        if (sys.index(rho.apply(w)) != m && w + rho.apply(w) == alpha) middle = true;
      }
      if (middle) continue;
      cls.kind = ClassKind::A1;
      cls.partner = i;
      cls.middle = -1;
      cls.members = {i};
      used[i] = true;
    } else {
      cls.partner = j;
      int k = sys.index(alpha + bar);
      if (k >= 0) {
        cls.kind = ClassKind::A2;
        cls.middle = k;
        cls.members = {i, j, k};
        used[i] = used[j] = used[k] = true;
      } else {
        cls.kind = ClassKind::A1Sq;
        cls.middle = -1;
        cls.members = {i, j};
        used[i] = used[j] = true;
      }
    }
    positives.push_back(std::move(cls));
  }
  // mirror: -[alpha] = [-alpha], with rep(-[alpha]) = -rep([alpha]) so that
  // twisted basis labels of opposite classes stay aligned
  std::vector<TwistedClass> out = positives;
  for (const TwistedClass& c : positives) {
    TwistedClass m;
    m.kind = c.kind;
    m.negative = true;
    m.rep = sys.negate(c.rep);
    m.partner = sys.negate(c.partner);
    m.middle = c.middle >= 0 ? sys.negate(c.middle) : -1;
    for (int idx : c.members) m.members.push_back(sys.negate(idx));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace tcg
