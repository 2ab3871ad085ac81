#include "bsg/conjugacy.hpp"

#include "bsg/error.hpp"
#include "bsg/numtheory.hpp"

namespace bsg {

namespace {

void require_nonunit(const Int& n) {
  if (abs(n) < 2) throw Error(ErrorCode::InvalidArgument, "conjugacy in G(1,n) is decided here only for |n| >= 2");
}

Int strip(Int r, const Int& n) {
  while (r != 0 && divides(n, r)) r /= n;
  return r;
}

std::uint64_t small(const Int& x, const char* what) {
  if (!fits_uint64(x)) throw Error(ErrorCode::Resource, std::string(what) + " " + to_string(x) + " exceeds 64 bits");
  return to_uint64(x);
}

std::int64_t small_signed(const Int& x) {
  if (!fits_int64(x)) throw Error(ErrorCode::Resource, "integer " + to_string(x) + " exceeds 64 bits");
  return to_int64(x);
}

Int smallest_prime_avoiding(const Int& x, const Int& y) {
  Int l = 2;
  while (divides(l, x) || divides(l, y)) mpz_nextprime(l.get_mpz_t(), l.get_mpz_t());
  return l;
}

// Forms of w1, w2 expressed with a common sign of t.
std::pair<ConjugacyForm, ConjugacyForm> forms(const Int& n, const Word& w1, const Word& w2,
                                              const ReduceOptions& opts) {
  return {conjugacy_form(n, w1, opts), conjugacy_form(n, w2, opts)};
}

// Smallest t with u_t > 1 and r, s inequivalent modulo u_t; r or s may be zero here.
unsigned long unsolvable_with_zero(const Int& n, const Int& r, const Int& s) {
  for (unsigned long t = 1;; ++t) {
    Int modulus = u_t(n, t);
    if (modulus > 1 && !solve_exp_congruence(n, r, s, modulus)) return t;
  }
}

}  // namespace

ConjugacyForm conjugacy_form(const Int& n, const Word& w, const ReduceOptions& opts) {
  require_nonunit(n);
  // a^p b^s a^-q is conjugate to a^(p-q) b^s; a^t b^(nr) = a^t a^-1 b^r a is conjugate to a^t b^r.
  SolvableNormalForm f = solvable_normal_form(n, w, opts);
  ConjugacyForm c;
  Int t = f.p - f.q;
  if (t < 0) {
    // a^t b^s is conjugate to the inverse of a^-t b^-s.
    c.t = -t;
    c.r = strip(-f.s, n);
    c.inverted = true;
  } else {
    c.t = t;
    c.r = strip(f.s, n);
  }
  return c;
}

bool is_conjugate_solvable(const Int& n, const Word& w1, const Word& w2, const ReduceOptions& opts) {
  require_nonunit(n);
  auto [f1, f2] = forms(n, w1, w2, opts);
  if (f1.signed_t() != f2.signed_t()) return false;
  if (f1.t == 0) return f1.r == f2.r;
  Int modulus = u_t(n, small(f1.t, "a-exponent"));
  if (modulus == 1) return true;
  return solve_exp_congruence(n, f1.r, f2.r, modulus).has_value();
}

bool is_conjugate_unimodular(const Int& n, const Word& w1, const Word& w2, const ReduceOptions& opts) {
  if (n != 1 && n != -1) throw Error(ErrorCode::InvalidArgument, "unimodular conjugacy needs n = 1 or n = -1");
  // a^p b^s a^-q with p q = 0 equals a^(p-q) b^(s n^q).
  auto form = [&](const Word& w) {
    SolvableNormalForm f = solvable_normal_form(n, w, opts);
    Int r = (n < 0 && mpz_odd_p(f.q.get_mpz_t())) ? Int(-f.s) : f.s;
    return std::pair{Int(f.p - f.q), r};
  };
  auto [t1, r1] = form(w1);
  auto [t2, r2] = form(w2);
  if (t1 != t2) return false;
  if (n == 1) return r1 == r2;
  // Klein bottle group: conjugating a^t b^r by a negates r, by b shifts r by 1 - (-1)^t.
  if (mpz_even_p(t1.get_mpz_t())) return abs(r1) == abs(r2);
  return mpz_even_p(Int(r1 - r2).get_mpz_t());
}

namespace {

Witness with_target(const GroupParams& g, Target target, Claim claim, std::string theorem,
                    std::vector<std::string> trace) {
  Witness w;
  w.source = g;
  w.target = std::move(target);
  w.claim = std::move(claim);
  w.theorem = std::move(theorem);
  w.search_trace = std::move(trace);
  return w;
}

// Metacyclic H_nu(k, l) for G(m', n') becomes H_{nu^-1}(k, l) for G(n', m') under a -> a^-1.
Target swap_target(const Target& t) {
  if (auto h = std::get_if<FiniteQuotient>(&t)) {
    if (h->l() == 1) return t;
    Int inv;
    Int nu = from_uint64(h->n_mod_l()), l = from_uint64(h->l());
    mpz_invert(inv.get_mpz_t(), nu.get_mpz_t(), l.get_mpz_t());
    return FiniteQuotient::make(to_int64(inv), h->k(), h->l());
  }
  if (auto q = std::get_if<PermQuotient>(&t)) return PermQuotient{q->image_a.inverse(), q->image_b};
  return t;
}

Word invert_a(const Word& w) {
  Word out;
  for (const auto& s : w.syllables()) out.append(s.gen, s.gen == Gen::A ? Int(-s.exp) : s.exp);
  return out;
}

}  // namespace

Witness separate_element(const GroupParams& g, const Word& w, const SeparationOptions& opts) {
  GroupParams src = GroupParams::make(g.m, g.n);
  if (!is_residually_finite(src).is_true())
    throw Error(ErrorCode::Precondition, "G(" + to_string(src.m) + "," + to_string(src.n) + ") is not residually finite");
  if (is_trivial(src, w, opts.reduce)) throw Error(ErrorCode::Precondition, "word is trivial in the group");

  // Work in canonical parameters; when m and n swap, a is replaced by a^-1.
  GroupParams c = canonicalize(src);
  const bool swapped = abs(src.m) > abs(src.n);
  const Word cw = swapped ? invert_a(w) : w;
  Claim claim{ClaimKind::ElementNontrivial, {w}};
  std::vector<std::string> trace;
  auto finish = [&](Target t, std::string theorem) {
    return with_target(src, swapped ? swap_target(t) : t, claim, std::move(theorem), std::move(trace));
  };

  Int sum = a_exponent_sum(cw);
  if (sum != 0) {
    std::uint64_t order = small(abs(sum) + 1, "cyclic order");
    trace.push_back("a-exponent sum " + to_string(sum) + " survives in Z_" + std::to_string(order));
    return finish(CyclicTarget{order}, "Theorem 1: cyclic quotient by a-exponent sum");
  }

  if (c.m == 1 && abs(c.n) >= 2) {
    ConjugacyForm f = conjugacy_form(c.n, cw, opts.reduce);
    Int l = smallest_prime_avoiding(c.n, f.r);
    trace.push_back("conjugate to b^" + to_string(f.r) + "; smallest prime dividing neither n nor r is " +
                    to_string(l));
    std::uint64_t ll = small(l, "modulus");
    return finish(FiniteQuotient::make(small_signed(c.n), ll - 1, ll), "Theorem 1: H_n(phi(l), l)");
  }

  auto j = cyclic_subgroup_membership(c, cw, opts.reduce);
  if (j) {
    Int eps = c.n / c.m;
    Int l = smallest_prime_avoiding(*j, c.n);
    std::uint64_t ll = small(l, "modulus");
    std::uint64_t k = (eps == 1 || ll == 2) ? 1 : 2;
    trace.push_back("word equals b^" + to_string(*j) + "; l = " + std::to_string(ll) + ", k = " + std::to_string(k));
    return finish(FiniteQuotient::make(small_signed(eps), k, ll), "Theorem 1: H_eps(k, l) with eps = n/m");
  }

  PermSearchOptions popts;
  popts.trace = &trace;
  auto hit = perm_quotient_search(c, cw, opts.max_degree, popts);
  if (!hit)
    throw Error(ErrorCode::BoundsExhausted,
                "no permutation quotient of degree <= " + std::to_string(opts.max_degree) + " separates the word");
  return finish(*hit, "Theorem 1: permutation quotient");
}

Witness separate_conjugacy(const Int& n, const Word& w1, const Word& w2, const SeparationOptions& opts) {
  require_nonunit(n);
  if (is_conjugate_solvable(n, w1, w2, opts.reduce))
    throw Error(ErrorCode::Precondition, "words are conjugate in G(1," + to_string(n) + ")");
  GroupParams g = GroupParams::make(1, n);
  Claim claim{ClaimKind::NonConjugate, {w1, w2}};
  auto [f1, f2] = forms(n, w1, w2, opts.reduce);
  std::vector<std::string> trace;

  if (f1.signed_t() != f2.signed_t()) {
    Int diff = abs(f1.signed_t() - f2.signed_t());
    std::uint64_t order = small(diff + 1, "cyclic order");
    trace.push_back("a-exponent sums " + to_string(f1.signed_t()) + " and " + to_string(f2.signed_t()) + " differ in Z_" +
                    std::to_string(order));
    return with_target(g, CyclicTarget{order}, claim, "Theorem 9: cyclic quotient by a-exponent sum",
                       std::move(trace));
  }

  unsigned long t;
  if (f1.t > 0) {
    t = small(f1.t, "a-exponent");
    trace.push_back("t = " + std::to_string(t) + ": " + to_string(f1.r) + " and " + to_string(f2.r) +
                    " are not equivalent modulo u_t = " + to_string(u_t(n, t)));
  } else {
    t = (f1.r != 0 && f2.r != 0) ? find_unsolvable_modulus(n, f1.r, f2.r) : unsolvable_with_zero(n, f1.r, f2.r);
    trace.push_back("t = 0, r = " + to_string(f1.r) + " vs " + to_string(f2.r) + "; smallest t* with no solution is " +
                    std::to_string(t) + ", u_t* = " + to_string(u_t(n, t)));
  }
  std::uint64_t modulus = small(u_t(n, t), "modulus");
  return with_target(g, FiniteQuotient::make(small_signed(n), t, modulus), claim, "Theorem 9: H_n(t, u_t)",
                     std::move(trace));
}

}  // namespace bsg
