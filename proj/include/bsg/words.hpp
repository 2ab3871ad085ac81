#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsg/bigint.hpp"

namespace bsg {

/// Parameters of the one-relator group <a, b | a^-1 b^m a = b^n>.
struct GroupParams {
  Int m;
  Int n;

  // Throws Error(InvalidArgument) when either parameter is zero.
  static GroupParams make(const Int& m, const Int& n);

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

enum class Gen : unsigned char { A, B };

struct Syllable {
  Gen gen;
  Int exp;  // never zero

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word in a, b. Adjacent syllables always carry distinct generators.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Syllable>& syllables);

  static Word a(const Int& e = 1);
  static Word b(const Int& e = 1);

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool empty() const noexcept { return syl_.empty(); }
  std::size_t size() const noexcept { return syl_.size(); }

  // Appends g^e and restores free reduction.
  void append(Gen g, const Int& e);
  Word inverse() const;
  Word pow(long k) const;

  // Lowercase generators, "^k" omitted for k = 1, single spaces between syllables.
  std::string str() const;

  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syl_;
};

// [x, y] = x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);

/// Parses the word grammar: `a`, `b`, `A` (= a^-1), `B` (= b^-1), each optionally followed by
/// `^` and a signed decimal exponent; whitespace and `*` separate tokens. Parenthesised
/// groups `( ... )^k` and commutators `[u, v]` are also accepted. Zero exponents vanish.
Word parse_word(std::string_view text);

struct ReduceOptions {
  // Any intermediate b-exponent wider than this aborts with Error(Resource).
  std::size_t max_bits = 1'000'000;
};

// Removes pinches a^-1 b^(mk) a -> b^(nk) and a b^(nk) a^-1 -> b^(mk) until none is left.
Word britton_reduce(const GroupParams& g, const Word& w, const ReduceOptions& opts = {});
// Britton-reduced and containing no pinch.
bool is_britton_reduced(const GroupParams& g, const Word& w);
bool is_trivial(const GroupParams& g, const Word& w, const ReduceOptions& opts = {});
bool are_equal(const GroupParams& g, const Word& x, const Word& y, const ReduceOptions& opts = {});

Int a_exponent_sum(const Word& w);

// If w reduces to b^j, returns j.
std::optional<Int> cyclic_subgroup_membership(const GroupParams& g, const Word& w,
                                              const ReduceOptions& opts = {});

/// a^p b^s a^-q in G(1, n), with p, q >= 0. When p and q are both positive n does not divide
/// s; when s = 0 at most one of p, q is nonzero.
struct SolvableNormalForm {
  Int p;
  Int s;
  Int q;

  Word word() const;
  friend bool operator==(const SolvableNormalForm&, const SolvableNormalForm&) = default;
};

SolvableNormalForm solvable_normal_form(const Int& n, const Word& w, const ReduceOptions& opts = {});

}  // namespace bsg
