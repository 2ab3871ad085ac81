#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsg/bigint.hpp"
#include "bsg/words.hpp"

namespace bsg {

/// An element a^i b^j of a metacyclic quotient, 0 <= i < k, 0 <= j < l.
struct QuotientElement {
  std::uint64_t i = 0;
  std::uint64_t j = 0;

  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
  friend auto operator<=>(const QuotientElement&, const QuotientElement&) = default;
};

/// H_n(k, l) = <a, b | a^-1 b a = b^n, a^k = b^l = 1>, valid when n^k = 1 (mod l).
/// It is the split extension of Z_l by Z_k and has exactly k*l elements.
class FiniteQuotient {
 public:
  // Throws Error(InvalidQuotient) if n^k != 1 (mod l) or k, l are zero.
  static FiniteQuotient make(std::int64_t n, std::uint64_t k, std::uint64_t l);

  std::int64_t n() const noexcept { return n_; }
  std::uint64_t n_mod_l() const noexcept { return n_mod_l_; }
  std::uint64_t k() const noexcept { return k_; }
  std::uint64_t l() const noexcept { return l_; }
  std::uint64_t order() const noexcept { return k_ * l_; }
  bool is_cyclic_a() const noexcept { return l_ == 1; }

  QuotientElement identity() const noexcept { return {}; }
  QuotientElement gen_a() const noexcept { return {k_ == 1 ? 0u : 1u, 0}; }
  QuotientElement gen_b() const noexcept { return {0, l_ == 1 ? 0u : 1u}; }

  bool contains(const QuotientElement& x) const noexcept { return x.i < k_ && x.j < l_; }
  QuotientElement multiply(const QuotientElement& x, const QuotientElement& y) const;
  QuotientElement invert(const QuotientElement& x) const;
  QuotientElement power(const QuotientElement& x, const Int& e) const;
  std::uint64_t element_order(const QuotientElement& x) const;

  // n^e mod l for e >= 0.
  std::uint64_t n_pow(std::uint64_t e) const;

  std::string str() const;  // "H_n(k,l)"

  friend bool operator==(const FiniteQuotient& x, const FiniteQuotient& y) noexcept {
    return x.n_ == y.n_ && x.k_ == y.k_ && x.l_ == y.l_;
  }

 private:
  std::int64_t n_ = 0;
  std::uint64_t n_mod_l_ = 0;
  std::uint64_t k_ = 1;
  std::uint64_t l_ = 1;
  std::shared_ptr<const std::vector<std::uint64_t>> powers_;  // n^i mod l for i < k, small k only
};

FiniteQuotient make_quotient(std::int64_t n, std::uint64_t k, std::uint64_t l);

// a -> a^1 b^0, b -> a^0 b^1, reading w as an element of G(1, n) with n = H's n.
QuotientElement evaluate(const FiniteQuotient& h, const Word& w);
// Same map for G(m, n); throws Error(RelationViolated) unless a^-1 b^m a = b^n holds in H.
QuotientElement evaluate(const FiniteQuotient& h, const GroupParams& g, const Word& w);
bool relation_holds(const FiniteQuotient& h, const GroupParams& g);

// Exhaustive search over all k*l conjugators.
bool q_is_conjugate(const FiniteQuotient& h, const QuotientElement& x, const QuotientElement& y);

// b^r and b^s are conjugate in H iff n^x r = s (mod l) for some x >= 0.
bool bpowers_conjugate(const FiniteQuotient& h, const Int& r, const Int& s);

// Z_c via the a-exponent sum: H with k = c, l = 1.
FiniteQuotient cyclic_witness(std::uint64_t c);

/// Permutation of {0, ..., degree-1}; products act on the right: x^(p*q) = (x^p)^q.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);
  static Perm identity(std::size_t degree);
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint16_t>>& cycles);
  // "(1,2,3)(4,5)", 1-based points; "()" is the identity.
  static Perm parse(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return img_.size(); }
  std::uint16_t operator[](std::size_t x) const { return img_[x]; }
  const std::vector<std::uint16_t>& images() const noexcept { return img_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  Perm pow(const Int& e) const;
  std::uint64_t order() const;
  std::vector<std::vector<std::uint16_t>> cycles() const;  // nontrivial cycles, min point first
  std::string str() const;

  friend Perm operator*(const Perm& x, const Perm& y);
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint16_t> img_;
};

/// Images of a and b in a symmetric group satisfying the G(m, n) relation.
struct PermQuotient {
  Perm image_a;
  Perm image_b;

  std::size_t degree() const noexcept { return image_a.degree(); }
  bool relation_holds(const GroupParams& g) const;
  Perm evaluate(const Word& w) const;
  std::string str() const;  // "a: (...) b: (...)"

  friend bool operator==(const PermQuotient&, const PermQuotient&) = default;
};

struct PermSearchOptions {
  // When nonzero, only images of b whose order divides this bound are tried.
  std::uint64_t b_order_bound = 0;
  // Optional sink for a human-readable trace of the search.
  std::vector<std::string>* trace = nullptr;
};

/// Visits every pair (image_a, image_b) in S_d, d = 1..max_degree, satisfying the relation,
/// with image_b running over one representative per cycle type. Order: increasing degree,
/// then order of image_b, then cycle type, then image_a lexicographically. The visitor
/// returns false to stop early; the function returns false if it was stopped.
bool enumerate_perm_quotients(const GroupParams& g, std::size_t max_degree,
                              const std::function<bool(const PermQuotient&)>& visit,
                              const PermSearchOptions& opts = {});

/// First PermQuotient (in enumeration order) sending target to a non-identity permutation.
/// Requires canonical |n| = m and a nontrivial target (Error(Precondition) otherwise).
/// An empty result only means the degree bound ran out.
std::optional<PermQuotient> perm_quotient_search(const GroupParams& g, const Word& target,
                                                 std::size_t max_degree,
                                                 const PermSearchOptions& opts = {});

}  // namespace bsg
