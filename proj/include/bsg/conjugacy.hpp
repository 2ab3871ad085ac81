#pragma once

#include <cstddef>

#include "bsg/bigint.hpp"
#include "bsg/presentation.hpp"
#include "bsg/witness.hpp"
#include "bsg/words.hpp"

namespace bsg {

/// Representative a^t b^r of a conjugacy class in G(1, n), |n| >= 2.
/// t >= 0 always; when the element has negative a-exponent sum the form describes its
/// inverse and `inverted` is set. If r != 0 then n does not divide r.
struct ConjugacyForm {
  Int t;
  Int r;
  bool inverted = false;

  Int signed_t() const { return inverted ? Int(-t) : t; }
  friend bool operator==(const ConjugacyForm&, const ConjugacyForm&) = default;
};

ConjugacyForm conjugacy_form(const Int& n, const Word& w, const ReduceOptions& opts = {});

// Decides conjugacy in G(1, n) for |n| >= 2; Error(InvalidArgument) otherwise.
bool is_conjugate_solvable(const Int& n, const Word& w1, const Word& w2,
                           const ReduceOptions& opts = {});

// G(1, 1) (free abelian) and G(1, -1) (Klein bottle group) via normal forms a^t b^r.
bool is_conjugate_unimodular(const Int& n, const Word& w1, const Word& w2,
                             const ReduceOptions& opts = {});

struct SeparationOptions {
  std::size_t max_degree = 8;  // permutation search bound
  ReduceOptions reduce;
};

// Witness whose target receives w nontrivially. Requires G residually finite and w
// nontrivial (Error(Precondition)); Error(BoundsExhausted) only from the permutation search.
Witness separate_element(const GroupParams& g, const Word& w, const SeparationOptions& opts = {});

// Witness under which the images of w1 and w2 are not conjugate. Requires |n| >= 2 and
// w1, w2 non-conjugate in G(1, n).
Witness separate_conjugacy(const Int& n, const Word& w1, const Word& w2,
                           const SeparationOptions& opts = {});

}  // namespace bsg
