#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tcg/groups.hpp"

namespace tcg {

using json = nlohmann::ordered_json;

struct Check {
  std::string id;
  bool pass;
  json witness;  // counterexample payload on failure, metrics on pass
};

/// Structured pass/fail record per identity.
struct Report {
  std::string suite;
  json config = json::object();
  json resolved = json::object();  // resolved design choices, e.g. the (e) reading
  std::vector<Check> checks;
  std::int64_t elapsed_ms = 0;

  void add(const std::string& id, bool pass, json witness = json());
  bool all_pass() const;
  json to_json() const;
};

// --- tangent algebra -------------------------------------------------------

/// Degree-1 coefficient of a curve over trunc(R,k), k >= 2, based at the
/// identity; returns a matrix over the base ring.
Mat tangent_extract(const Mat& curve);

/// The membership identities from the tangent-algebra argument, as exact
/// matrix identities, plus mutation controls and a sampled check that short
/// identity-based curves extract into the twisted basis with fixed
/// coefficients.
Report verify_tangent_identities(const TwistSetup& s, std::uint64_t seed = 1);

// --- generation of M_n(R) --------------------------------------------------

/// The declared generator parameter set of the elementary twisted group.
/// A1: t in {1,-1}; A1^2: t in {1,-1,a,-a};
/// A2: (t,u) in {(±1,1/2),(±2,2),(±a,-a^2/2),(±2a,-2a^2),(0,±a)}.
std::vector<GroupElement> span_generator_set(const TwistSetup& s,
                                             const std::optional<Elem>& antifixed = std::nullopt);

struct SpanClosureResult {
  int dimension = 0;
  int products_tried = 0;
  bool stabilized = false;  // true when the closure stopped growing on its own
};

/// Smallest unital subspace of M_n closed under multiplication containing the
/// generators; echelon rank over a field. Deterministic BFS order; stops as
/// soon as the dimension reaches n^2.
SpanClosureResult span_closure(const std::vector<Mat>& gens, RingRef field, int n);

Report verify_generation(const TwistSetup& s);

// --- recovery formulas -----------------------------------------------------

/// Exact evaluation of the generator-combination formulas that recover
/// ad(X_member) from class generators.
Mat recover_root_element(const TwistSetup& s, const TwistedClass& cls, int member);

Report verify_recovery(const TwistSetup& s, std::uint64_t seed = 1);

// --- normalizer sanity -----------------------------------------------------

/// Declared ring extension R inside S with a syntactic membership test.
struct ExtensionPair {
  std::string name;
  RingRef S = nullptr;
  std::string subring_desc;
  Elem antifixed_in;  // an antifixed unit of S lying in R
  std::function<bool(const Elem&)> contains;
  std::function<Elem(std::mt19937_64&)> sample_in;   // element of R
  std::function<Elem(std::mt19937_64&)> sample_out;  // element of S outside R
};

/// Registered pairs: "zi6" (Gaussian integers with 1/6 inside the Gaussian
/// rationals) and "gf9" (F_9 inside F_729 with compatible Frobenius).
ExtensionPair extension_pair(const std::string& name);
std::optional<std::string> default_extension_for(RingRef ring);

struct ConjWitness {
  int gen;
  int row, col;
  std::string entry;
};

/// True iff g x g^-1 has all entries in R for every declared generator x of
/// the elementary twisted group over R; witness on failure.
std::pair<bool, std::optional<ConjWitness>> conjugation_stays_in_ring(const TwistSetup& s,
                                                                      const GroupElement& g,
                                                                      const ExtensionPair& ext);

/// Seeded random word in the elementary twisted group over ext.S; parameters
/// are drawn from R, except that with poison=true one factor gets a parameter
/// outside R.
GroupElement sample_word(const TwistSetup& s, const ExtensionPair& ext, std::mt19937_64& rng,
                         bool poison);

/// Desk-scale normalizer check: 'count' in-R samples must conjugate the
/// generator set back into M_n(R) (and be sigma-fixed with entries in R);
/// 'count' poisoned samples must each fail with an explicit witness.
Report check_normalizer_sample(const TwistSetup& s, const ExtensionPair& ext, std::uint64_t seed,
                               int count);

}  // namespace tcg
