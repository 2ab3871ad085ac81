#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bsg/quotients.hpp"
#include "bsg/words.hpp"

namespace bsg {

struct CyclicTarget {
  std::uint64_t order = 1;  // Z_order, a -> 1, b -> 0

  friend bool operator==(const CyclicTarget&, const CyclicTarget&) = default;
};

using Target = std::variant<FiniteQuotient, PermQuotient, CyclicTarget>;

enum class ClaimKind { ElementNontrivial, NonConjugate, OutsideSubgroup };

const char* claim_kind_name(ClaimKind k) noexcept;

struct Claim {
  ClaimKind kind = ClaimKind::ElementNontrivial;
  // ElementNontrivial: {w}; NonConjugate: {w1, w2}; OutsideSubgroup: {w, generator}.
  std::vector<Word> words;
};

/// A homomorphism from G(m, n) onto a finite group (a -> a, b -> b, or explicit
/// permutations) together with the separation it certifies.
struct Witness {
  GroupParams source;
  Target target;
  Claim claim;
  std::string theorem;                    // clause the construction follows
  std::vector<std::string> search_trace;  // decisions taken while searching
};

// A FiniteQuotient with l = 1 is reported as a cyclic target.
Target normalize_target(const FiniteQuotient& h);
std::uint64_t target_order(const Target& t);
std::string target_str(const Target& t);

nlohmann::json witness_to_json(const Witness& w);
// Throws Error(InvalidArgument) on schema violations and ParseError on bad words.
Witness witness_from_json(const nlohmann::json& j);

struct VerifyResult {
  bool ok = false;
  std::string failed_check;  // "schema", "relation", "claim" or empty
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

/// Rechecks a witness from its data alone: the relation in the target, then the claim.
/// Evaluation and conjugacy are computed here from scratch rather than through the
/// quotient module. Conjugacy classes are cached per instance, so reusing one verifier
/// across many witnesses over the same targets is cheap.
class WitnessVerifier {
 public:
  VerifyResult verify(const Witness& w);
  VerifyResult verify_json(std::string_view text);

 private:
  using Key = std::tuple<int, std::vector<std::uint64_t>, std::vector<std::uint64_t>>;
  std::map<Key, std::set<std::vector<std::uint64_t>>> class_cache_;

  const std::set<std::vector<std::uint64_t>>& conjugacy_class(const Target& t,
                                                            const std::vector<std::uint64_t>& x);
};

VerifyResult verify(const Witness& w);
VerifyResult verify_json(std::string_view text);

}  // namespace bsg
