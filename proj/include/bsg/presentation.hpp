#pragma once

#include <optional>
#include <string>

#include "bsg/bigint.hpp"
#include "bsg/numtheory.hpp"
#include "bsg/words.hpp"

namespace bsg {

// Unique isomorphic pair with |n| >= m > 0.
GroupParams canonicalize(const GroupParams& g);
bool is_isomorphic(const GroupParams& g1, const GroupParams& g2);

enum class Truth { False, True, Unknown };

const char* truth_name(Truth t) noexcept;  // "false", "true", "unknown"

/// Which clause of the classification decided a verdict. `id` is stable for tooling,
/// `citation` is what a human reads ("Theorem 1", "Corollary", ...).
struct Reason {
  std::string id;
  std::string citation;
};

struct Verdict {
  Truth value = Truth::Unknown;
  Reason reason;
  std::optional<Int> witness_s;      // pi-number found for F_pi-residuality
  std::optional<Int> witness_prime;  // prime that fired (e.g. p | n - 1, or the virtual p)
  std::optional<Word> witness_word;  // nontrivial element killed by every finite quotient

  bool is_true() const noexcept { return value == Truth::True; }
};

Verdict is_residually_finite(const GroupParams& g);
Verdict is_residually_p(const GroupParams& g, const Int& p);

inline constexpr unsigned long default_pi_search_bound = 1'000'000;

// Exact whenever a closed-form criterion applies; otherwise a bounded search over pi-numbers
// s <= search_bound that may end in Unknown.
Verdict is_residually_pi(const GroupParams& g, const PrimeSet& pi,
                         const Int& search_bound = Int(default_pi_search_bound));
Verdict is_virtually_residually_p(const GroupParams& g, const Int& p);
Verdict is_virtually_residually_pi(const GroupParams& g, const PrimeSet& pi);
Verdict is_conjugacy_separable(const GroupParams& g);
Verdict is_conjugacy_separable_pi(const GroupParams& g, const PrimeSet& pi,
                                  const Int& search_bound = Int(default_pi_search_bound));
Verdict is_subgroup_separable(const GroupParams& g);

// The nontrivial commutator [a b^d a^-1, b] with d = gcd(m, n).
Word finite_kernel_commutator(const GroupParams& g);

/// Generators of the normal subgroup sigma(G) (all finite quotients) or sigma_p(G)
/// (finite p-quotients), given as a normal closure.
struct SigmaDescription {
  enum class Kind { Finite, FiniteP };

  struct Params {
    Int r, s;    // p-adic valuations of m and n
    Int m1, n1;  // p-free parts
    Int d, u, v; // d = gcd(m1, n1), m1 = d u, n1 = d v
    Int t;       // min(r, s), case 1 only
  };

  Kind kind = Kind::Finite;
  GroupParams group;                     // canonical parameters the description refers to
  std::optional<Int> prime;              // FiniteP only
  int case_number = 0;                   // FiniteP: 1 or 2
  std::optional<Int> commutator_exponent;  // family {[a^k b^e a^-k, b] : k in Z}
  std::optional<Word> extra_element;     // a^-1 b^(p^r u) a b^(-p^r v)
  std::optional<Int> power_element;      // b^(p^t), stored as p^t
  std::optional<Params> params;          // FiniteP only

  // [a^k b^e a^-k, b] for the stored exponent e.
  Word commutator_member(long k) const;
};

SigmaDescription sigma_description(const GroupParams& g);
SigmaDescription sigma_p_description(const GroupParams& g, const Int& p);

/// For elements x, y of equal finite order with x^n = y^m, [x^d, y] = 1 where d = gcd(m, n).
/// Callers pass the measured commutator; the result is that measurement, and it must come
/// back true whenever the hypotheses hold. Throws Error(Precondition) if they do not.
bool power_commutator_check(bool orders_equal, const Int& x_order, const Int& exponent_n,
                 const Int& exponent_m, bool commutator_is_trivial);

}  // namespace bsg
