#include "bsg/witness.hpp"

#include <deque>
#include <numeric>

#include "bsg/error.hpp"

namespace bsg {

using nlohmann::json;

const char* claim_kind_name(ClaimKind k) noexcept {
  switch (k) {
    case ClaimKind::ElementNontrivial: return "element_nontrivial";
    case ClaimKind::NonConjugate: return "non_conjugate";
    case ClaimKind::OutsideSubgroup: return "outside_subgroup";
  }
  return "element_nontrivial";
}

Target normalize_target(const FiniteQuotient& h) {
  if (h.l() == 1) return CyclicTarget{h.k()};
  return h;
}

namespace {

std::uint64_t perm_group_order(const PermQuotient& q) {
  std::set<std::vector<std::uint16_t>> seen{Perm::identity(q.degree()).images()};
  std::deque<Perm> todo{Perm::identity(q.degree())};
  while (!todo.empty()) {
    Perm x = todo.front();
    todo.pop_front();
    for (const Perm* g : {&q.image_a, &q.image_b}) {
      Perm y = x * *g;
      if (seen.insert(y.images()).second) todo.push_back(y);
    }
  }
  return seen.size();
}

json int_json(const Int& x) {
  if (fits_int64(x)) return to_int64(x);
  return to_string(x);
}

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, "witness schema: " + what);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) schema_error("expected an object around '" + std::string(name) + "'");
  auto it = j.find(name);
  if (it == j.end()) schema_error("missing field '" + std::string(name) + "'");
  return *it;
}

Int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (v.is_number_integer()) return v.is_number_unsigned() ? from_uint64(v.get<std::uint64_t>()) : from_int64(v.get<std::int64_t>());
  if (v.is_string()) return parse_int(v.get<std::string>());
  schema_error("field '" + std::string(name) + "' must be an integer");
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) schema_error("field '" + std::string(name) + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

std::uint64_t target_order(const Target& t) {
  if (auto h = std::get_if<FiniteQuotient>(&t)) return h->order();
  if (auto c = std::get_if<CyclicTarget>(&t)) return c->order;
  return perm_group_order(std::get<PermQuotient>(t));
}

std::string target_str(const Target& t) {
  if (auto h = std::get_if<FiniteQuotient>(&t)) return h->str();
  if (auto c = std::get_if<CyclicTarget>(&t)) return "Z_" + std::to_string(c->order);
  const auto& q = std::get<PermQuotient>(t);
  return "S_" + std::to_string(q.degree()) + " " + q.str();
}

json witness_to_json(const Witness& w) {
  json target;
  if (auto h = std::get_if<FiniteQuotient>(&w.target)) {
    target = {{"type", "metacyclic"}, {"params", {{"n", h->n()}, {"k", h->k()}, {"l", h->l()}}}};
  } else if (auto c = std::get_if<CyclicTarget>(&w.target)) {
    target = {{"type", "cyclic"}, {"params", {{"order", c->order}}}};
  } else {
    const auto& q = std::get<PermQuotient>(w.target);
    target = {{"type", "perm"},
              {"params", {{"degree", q.degree()}, {"a", q.image_a.str()}, {"b", q.image_b.str()}}}};
  }
  json words = json::array();
  for (const auto& word : w.claim.words) words.push_back(word.str());
  return {{"source", {{"m", int_json(w.source.m)}, {"n", int_json(w.source.n)}}},
          {"target", target},
          {"claim", {{"kind", claim_kind_name(w.claim.kind)}, {"words", words}}},
          {"meta", {{"theorem", w.theorem}, {"search_trace", w.search_trace}}}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  const json& src = field(j, "source");
  w.source = GroupParams::make(int_field(src, "m"), int_field(src, "n"));

  const json& tgt = field(j, "target");
  std::string type = string_field(tgt, "type");
  const json& params = field(tgt, "params");
  if (type == "metacyclic") {
    Int n = int_field(params, "n"), k = int_field(params, "k"), l = int_field(params, "l");
    if (!fits_int64(n) || !fits_uint64(k) || !fits_uint64(l) || k == 0 || l == 0)
      schema_error("metacyclic parameters out of range");
    w.target = FiniteQuotient::make(to_int64(n), to_uint64(k), to_uint64(l));
  } else if (type == "cyclic") {
    Int order = int_field(params, "order");
    if (!fits_uint64(order) || order == 0) schema_error("cyclic order must be a positive 64-bit integer");
    w.target = CyclicTarget{to_uint64(order)};
  } else if (type == "perm") {
    Int degree = int_field(params, "degree");
    if (degree < 1 || degree > 0xfffe) schema_error("permutation degree out of range");
    std::size_t d = to_uint64(degree);
    w.target = PermQuotient{Perm::parse(d, string_field(params, "a")), Perm::parse(d, string_field(params, "b"))};
  } else {
    schema_error("unknown target type '" + type + "'");
  }

  const json& claim = field(j, "claim");
  std::string kind = string_field(claim, "kind");
  if (kind == "element_nontrivial") w.claim.kind = ClaimKind::ElementNontrivial;
  else if (kind == "non_conjugate") w.claim.kind = ClaimKind::NonConjugate;
  else if (kind == "outside_subgroup") w.claim.kind = ClaimKind::OutsideSubgroup;
  else schema_error("unknown claim kind '" + kind + "'");
  const json& words = field(claim, "words");
  if (!words.is_array()) schema_error("claim words must be an array");
  for (const auto& word : words) {
    if (!word.is_string()) schema_error("claim words must be strings");
    w.claim.words.push_back(parse_word(word.get<std::string>()));
  }

  if (auto meta = j.find("meta"); meta != j.end() && meta->is_object()) {
    if (auto th = meta->find("theorem"); th != meta->end() && th->is_string()) w.theorem = th->get<std::string>();
    if (auto tr = meta->find("search_trace"); tr != meta->end() && tr->is_array())
      for (const auto& line : *tr)
        if (line.is_string()) w.search_trace.push_back(line.get<std::string>());
  }
  return w;
}

// Verification. Everything below works on raw vectors so that it shares no arithmetic with
// the quotient module.

namespace {

using Elem = std::vector<std::uint64_t>;

// A finite group given by its multiplication on raw element vectors plus the images of a, b.
struct Model {
  int type = 0;  // 0 metacyclic, 1 cyclic, 2 perm
  std::vector<std::uint64_t> params;
  std::uint64_t n = 0, k = 1, l = 1;  // metacyclic
  std::uint64_t c = 1;                // cyclic
  std::size_t degree = 0;             // perm
  Elem a, b;

  Elem identity() const {
    if (type == 0) return {0, 0};
    if (type == 1) return {0};
    Elem e(degree);
    std::iota(e.begin(), e.end(), 0);
    return e;
  }

  std::uint64_t n_to(std::uint64_t e) const {
    unsigned __int128 r = 1 % l, base = n;
    while (e) {
      if (e & 1) r = r * base % l;
      base = base * base % l;
      e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
  }

  Elem mul(const Elem& x, const Elem& y) const {
    if (type == 0) {
      unsigned __int128 j = static_cast<unsigned __int128>(x[1]) * n_to(y[0]) + y[1];
      return {(x[0] + y[0]) % k, static_cast<std::uint64_t>(j % l)};
    }
    if (type == 1) return {(x[0] + y[0]) % c};
    Elem z(degree);
    for (std::size_t i = 0; i < degree; ++i) z[i] = y[x[i]];
    return z;
  }

  Elem inv(const Elem& x) const {
    if (type == 0) {
      std::uint64_t i = (k - x[0]) % k;
      unsigned __int128 j = static_cast<unsigned __int128>(x[1]) * n_to(i) % l;
      return {i, static_cast<std::uint64_t>((l - j) % l)};
    }
    if (type == 1) return {(c - x[0]) % c};
    Elem z(degree);
    for (std::size_t i = 0; i < degree; ++i) z[x[i]] = i;
    return z;
  }

  // Any multiple of the order of g; exponents are reduced modulo it.
  std::uint64_t exponent_of(const Elem& g) const {
    if (type == 0) return k * l;
    if (type == 1) return c;
    std::uint64_t o = 1;
    std::vector<bool> seen(degree);
    for (std::size_t x = 0; x < degree; ++x) {
      if (seen[x]) continue;
      std::uint64_t len = 0;
      for (std::size_t y = x; !seen[y]; y = g[y]) {
        seen[y] = true;
        ++len;
      }
      o = std::lcm(o, len);
    }
    return o;
  }

  Elem power(const Elem& g, const Int& e) const {
    Elem base = e < 0 ? inv(g) : g;
    Int m = from_uint64(exponent_of(g));
    Int r = abs(e);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    std::uint64_t left = mpz_get_ui(r.get_mpz_t());
    Elem out = identity();
    while (left) {
      if (left & 1) out = mul(out, base);
      base = mul(base, base);
      left >>= 1;
    }
    return out;
  }

  Elem eval(const Word& w) const {
    Elem x = identity();
    for (const auto& s : w.syllables()) x = mul(x, power(s.gen == Gen::A ? a : b, s.exp));
    return x;
  }
};

struct ModelError {
  std::string detail;
};

std::vector<std::uint64_t> perm_vector(const Perm& p) { return {p.images().begin(), p.images().end()}; }

Model model_of(const Target& t) {
  Model md;
  if (auto h = std::get_if<FiniteQuotient>(&t)) {
    md.type = 0;
    md.k = h->k();
    md.l = h->l();
    if (md.k == 0 || md.l == 0) throw ModelError{"k and l must be positive"};
    __int128 nn = h->n() % static_cast<__int128>(md.l);
    if (nn < 0) nn += md.l;
    md.n = static_cast<std::uint64_t>(nn);
    if (md.n_to(md.k) != 1 % md.l) throw ModelError{"n^k != 1 (mod l): " + h->str() + " is not a group of order kl"};
    md.params = {md.n, md.k, md.l};
    md.a = {1 % md.k, 0};
    md.b = {0, 1 % md.l};
  } else if (auto c = std::get_if<CyclicTarget>(&t)) {
    md.type = 1;
    md.c = c->order;
    if (md.c == 0) throw ModelError{"cyclic order must be positive"};
    md.params = {md.c};
    md.a = {1 % md.c};
    md.b = {0};
  } else {
    const auto& q = std::get<PermQuotient>(t);
    md.type = 2;
    md.degree = q.image_a.degree();
    if (q.image_b.degree() != md.degree) throw ModelError{"permutation degrees differ"};
    md.a = perm_vector(q.image_a);
    md.b = perm_vector(q.image_b);
    md.params = md.a;
    md.params.insert(md.params.end(), md.b.begin(), md.b.end());
  }
  return md;
}

std::string show(const Elem& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

VerifyResult fail(std::string check, std::string detail) { return {false, std::move(check), std::move(detail)}; }

}  // namespace

const std::set<Elem>& WitnessVerifier::conjugacy_class(const Target& t, const Elem& x) {
  Model md = model_of(t);
  Key key{md.type, md.params, x};
  auto it = class_cache_.find(key);
  if (it != class_cache_.end()) return it->second;
  // The group is generated by the images of a and b, so the class of x is its orbit under
  // conjugation by those two images.
  std::set<Elem> orbit{x};
  std::deque<Elem> todo{x};
  const Elem ai = md.inv(md.a), bi = md.inv(md.b);
  while (!todo.empty()) {
    Elem y = todo.front();
    todo.pop_front();
    for (const auto& [g, gi] : {std::pair{md.a, ai}, std::pair{md.b, bi}}) {
      Elem z = md.mul(md.mul(gi, y), g);
      if (orbit.insert(z).second) todo.push_back(std::move(z));
    }
  }
  return class_cache_.emplace(std::move(key), std::move(orbit)).first->second;
}

VerifyResult WitnessVerifier::verify(const Witness& w) {
  Model md;
  try {
    md = model_of(w.target);
  } catch (const ModelError& e) {
    return fail("relation", e.detail);
  }

  const Elem lhs = md.mul(md.mul(md.inv(md.a), md.power(md.b, w.source.m)), md.a);
  const Elem rhs = md.power(md.b, w.source.n);
  if (lhs != rhs)
    return fail("relation", "a^-1 b^" + to_string(w.source.m) + " a = " + show(lhs) + " but b^" +
                                to_string(w.source.n) + " = " + show(rhs) + " in " + target_str(w.target));

  const auto& words = w.claim.words;
  switch (w.claim.kind) {
    case ClaimKind::ElementNontrivial: {
      if (words.size() != 1) return fail("schema", "element_nontrivial takes one word");
      Elem x = md.eval(words[0]);
      if (x == md.identity()) return fail("claim", words[0].str() + " maps to the identity");
      return {true, "", words[0].str() + " -> " + show(x)};
    }
    case ClaimKind::NonConjugate: {
      if (words.size() != 2) return fail("schema", "non_conjugate takes two words");
      Elem x = md.eval(words[0]), y = md.eval(words[1]);
      const auto& cls = conjugacy_class(w.target, y);
      if (cls.count(x))
        return fail("claim", "images " + show(x) + " and " + show(y) + " are conjugate in " + target_str(w.target));
      return {true, "", "images " + show(x) + " and " + show(y) + " lie in different classes (class size " +
                            std::to_string(cls.size()) + ")"};
    }
    case ClaimKind::OutsideSubgroup: {
      if (words.size() != 2) return fail("schema", "outside_subgroup takes a word and a generator");
      Elem x = md.eval(words[0]), g = md.eval(words[1]);
      Elem p = md.identity();
      do {
        if (p == x) return fail("claim", show(x) + " lies in the subgroup generated by " + show(g));
        p = md.mul(p, g);
      } while (p != md.identity());
      return {true, "", show(x) + " is outside the subgroup generated by " + show(g)};
    }
  }
  return fail("schema", "unknown claim");
}

VerifyResult WitnessVerifier::verify_json(std::string_view text) {
  Witness w;
  try {
    w = witness_from_json(json::parse(text));
  } catch (const json::exception& e) {
    return fail("schema", e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidQuotient) return fail("relation", e.what());
    return fail("schema", e.what());
  }
  return verify(w);
}

VerifyResult verify(const Witness& w) { return WitnessVerifier().verify(w); }

VerifyResult verify_json(std::string_view text) { return WitnessVerifier().verify_json(text); }

}  // namespace bsg
