#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "bsg/bigint.hpp"

namespace bsg {

/// A finite, non-empty set of primes, kept sorted and duplicate-free.
class PrimeSet {
 public:
  // Throws Error(NotPrime) for a non-prime member and Error(InvalidArgument) if empty.
  explicit PrimeSet(std::vector<Int> primes);

  const std::vector<Int>& primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool contains(const Int& p) const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<Int> primes_;
};

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  int unit = 1;                    // +1 or -1
  std::vector<PrimePower> factors;  // primes strictly increasing

  Int value() const;
};

bool is_prime(const Int& x);

// Trial division, then deterministic Pollard-Brent rho for the cofactor.
Factorization factorize(const Int& x);

Int euler_phi(const Int& l);

// Smallest x >= 1 with n^x = 1 (mod modulus). Requires modulus >= 2 and gcd(n, modulus) = 1.
Int multiplicative_order(const Int& n, const Int& modulus);

// Every prime factor of x lies in pi. x = 1 qualifies for any pi.
bool is_pi_number(const Int& x, const PrimeSet& pi);

// Smallest x >= 0 with n^x * r = s (mod modulus). A modulus of 1 makes everything
// congruent, so the answer is 0. Requires gcd(n, modulus) = 1.
std::optional<Int> solve_exp_congruence(const Int& n, const Int& r, const Int& s, const Int& modulus);

// |n^t - 1|; rejects n in {-1, 0, 1} and t = 0.
Int u_t(const Int& n, unsigned long t);

// Smallest t >= 1 for which n^x * r = s (mod |n^t - 1|) has no solution. Moduli equal to 1
// are skipped. Requires |n| >= 2, r != s, both nonzero and not divisible by n.
// `max_t` is a resource guard; exceeding it raises Error(Resource).
unsigned long find_unsolvable_modulus(const Int& n, const Int& r, const Int& s,
                                      unsigned long max_t = 1u << 16);

/// Explicit threshold past which the congruence n^x r = s (mod |n^t - 1|) is unsolvable.
///
/// For n >= 2 the threshold is built from the base-n digits of |r|: with `digits_minus_one`
/// the number of digits minus one and `shift` the least l making every shifted rotation of
/// n^l r fall outside s's residue class, every t >= threshold is a non-solvable modulus.
/// Negative n goes through n^2, r^2, s^2; then only even t are covered (`step` = 2), and the
/// case s = -r has no explicit threshold at all.
struct UnsolvabilityBound {
  unsigned long digits_minus_one = 0;
  unsigned long shift = 0;
  unsigned long threshold = 0;
  unsigned step = 1;

  // True if the bound certifies that modulus u_t is non-solvable.
  bool covers(unsigned long t) const noexcept { return t >= threshold && t % step == 0; }
};

UnsolvabilityBound unsolvability_bound(const Int& n, const Int& r, const Int& s);

/// Enumerates pi-numbers 1, ... in strictly increasing order.
class PiNumberSequence {
 public:
  explicit PiNumberSequence(const PrimeSet& pi);
  Int next();

 private:
  struct Entry {
    Int value;
    std::size_t min_index;  // next multiplication uses primes[min_index..]
  };
  struct Greater {
    bool operator()(const Entry& x, const Entry& y) const { return x.value > y.value; }
  };

  std::vector<Int> primes_;
  std::priority_queue<Entry, std::vector<Entry>, Greater> heap_;
};

}  // namespace bsg
