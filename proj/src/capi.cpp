#include "bsg/bsg.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "bsg/conjugacy.hpp"
#include "bsg/error.hpp"
#include "bsg/presentation.hpp"
#include "bsg/quotients.hpp"
#include "bsg/witness.hpp"

struct bsg_group {
  bsg::GroupParams g;
};
struct bsg_word {
  bsg::Word w;
};
struct bsg_verdict {
  bsg::Verdict v;
  nlohmann::json j;
};
struct bsg_witness {
  bsg::Witness w;
};
struct bsg_quotient {
  bsg::FiniteQuotient h;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

bsg_status status_of(bsg::ErrorCode code) {
  switch (code) {
    case bsg::ErrorCode::InvalidArgument: return BSG_ERR_INVALID_ARGUMENT;
    case bsg::ErrorCode::NotUnit: return BSG_ERR_NOT_UNIT;
    case bsg::ErrorCode::NotPrime: return BSG_ERR_NOT_PRIME;
    case bsg::ErrorCode::Divisibility: return BSG_ERR_DIVISIBILITY;
    case bsg::ErrorCode::Parse: return BSG_ERR_PARSE;
    case bsg::ErrorCode::InvalidQuotient: return BSG_ERR_INVALID_QUOTIENT;
    case bsg::ErrorCode::RelationViolated: return BSG_ERR_RELATION_VIOLATED;
    case bsg::ErrorCode::Precondition: return BSG_ERR_PRECONDITION;
    case bsg::ErrorCode::Resource: return BSG_ERR_RESOURCE;
    case bsg::ErrorCode::BoundsExhausted: return BSG_ERR_BOUNDS_EXHAUSTED;
  }
  return BSG_ERR_INTERNAL;
}

template <class F>
bsg_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return BSG_OK;
  } catch (const bsg::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BSG_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BSG_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw bsg::Error(bsg::ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bsg::Int int_arg(const char* s, const char* what) {
  require(s, what);
  return bsg::parse_int(s);
}

json int_json(const bsg::Int& x) {
  if (bsg::fits_int64(x)) return bsg::to_int64(x);
  return bsg::to_string(x);
}

json group_json(const bsg::GroupParams& g) { return {{"m", int_json(g.m)}, {"n", int_json(g.n)}}; }

bsg::ReduceOptions reduce_options(const bsg_config* cfg) {
  bsg::ReduceOptions o;
  if (cfg && cfg->bit_guard) o.max_bits = cfg->bit_guard;
  return o;
}

bsg::SeparationOptions separation_options(const bsg_config* cfg) {
  bsg::SeparationOptions o;
  o.reduce = reduce_options(cfg);
  if (cfg && cfg->max_degree) o.max_degree = cfg->max_degree;
  return o;
}

bsg::Int search_bound(const bsg_config* cfg) {
  if (cfg && cfg->search_bound) {
    bsg::Int b = bsg::parse_int(cfg->search_bound);
    if (b < 1) throw bsg::Error(bsg::ErrorCode::InvalidArgument, "search bound must be positive");
    return b;
  }
  return bsg::Int(bsg::default_pi_search_bound);
}

const char* property_name(bsg_property p) {
  switch (p) {
    case BSG_PROP_RESIDUALLY_FINITE: return "residually_finite";
    case BSG_PROP_RESIDUALLY_P: return "residually_p";
    case BSG_PROP_RESIDUALLY_PI: return "residually_pi";
    case BSG_PROP_VIRTUALLY_RESIDUALLY_P: return "virtually_residually_p";
    case BSG_PROP_VIRTUALLY_RESIDUALLY_PI: return "virtually_residually_pi";
    case BSG_PROP_CONJUGACY_SEPARABLE: return "conjugacy_separable";
    case BSG_PROP_CONJUGACY_SEPARABLE_PI: return "conjugacy_separable_pi";
    case BSG_PROP_SUBGROUP_SEPARABLE: return "subgroup_separable";
  }
  return "unknown";
}

const char* property_label(bsg_property p) {
  switch (p) {
    case BSG_PROP_RESIDUALLY_FINITE: return "residually finite";
    case BSG_PROP_RESIDUALLY_P: return "F_p-residual";
    case BSG_PROP_RESIDUALLY_PI: return "F_pi-residual";
    case BSG_PROP_VIRTUALLY_RESIDUALLY_P: return "virtually F_p-residual";
    case BSG_PROP_VIRTUALLY_RESIDUALLY_PI: return "virtually F_pi-residual";
    case BSG_PROP_CONJUGACY_SEPARABLE: return "conjugacy separable";
    case BSG_PROP_CONJUGACY_SEPARABLE_PI: return "conjugacy F_pi-separable";
    case BSG_PROP_SUBGROUP_SEPARABLE: return "subgroup separable";
  }
  return "unknown";
}

json sigma_json(const bsg::SigmaDescription& sd) {
  json j;
  j["group"] = group_json(sd.group);
  std::string family;
  if (sd.commutator_exponent)
    family = "[a^k " + bsg::Word::b(*sd.commutator_exponent).str() + " a^-k, b] (k in Z)";
  if (sd.kind == bsg::SigmaDescription::Kind::Finite) {
    j["kind"] = "finite";
    j["commutator_exponent"] = int_json(*sd.commutator_exponent);
    j["generators"] = {family};
  } else {
    j["kind"] = "finite_p";
    j["prime"] = int_json(*sd.prime);
    j["case"] = sd.case_number;
    const auto& p = *sd.params;
    j["params"] = {{"r", int_json(p.r)},   {"s", int_json(p.s)}, {"m1", int_json(p.m1)}, {"n1", int_json(p.n1)},
                   {"d", int_json(p.d)},   {"u", int_json(p.u)}, {"v", int_json(p.v)}};
    if (sd.case_number == 1) {
      j["params"]["t"] = int_json(p.t);
      j["power_element"] = int_json(*sd.power_element);
      j["generators"] = {"b^" + bsg::to_string(*sd.power_element)};
    } else {
      j["commutator_exponent"] = int_json(*sd.commutator_exponent);
      j["extra_element"] = sd.extra_element->str();
      j["generators"] = {sd.extra_element->str(), family};
    }
  }
  std::string desc;
  for (const auto& g : j["generators"]) desc += (desc.empty() ? "" : ", ") + g.get<std::string>();
  j["description"] = "normal closure of { " + desc + " }";
  return j;
}

json verify_report(const bsg::VerifyResult& r) {
  json j = {{"ok", r.ok}, {"detail", r.detail}};
  j["failed_check"] = r.failed_check.empty() ? json(nullptr) : json(r.failed_check);
  return j;
}

}  // namespace

extern "C" {

void bsg_config_init(bsg_config* cfg) {
  if (!cfg) return;
  cfg->search_bound = nullptr;
  cfg->max_degree = 8;
  cfg->bit_guard = 1'000'000;
}

const char* bsg_last_error(void) { return last_error.c_str(); }

const char* bsg_status_name(bsg_status status) {
  switch (status) {
    case BSG_OK: return "ok";
    case BSG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BSG_ERR_NOT_UNIT: return "not a unit";
    case BSG_ERR_NOT_PRIME: return "not prime";
    case BSG_ERR_DIVISIBILITY: return "divisibility";
    case BSG_ERR_PARSE: return "syntax error";
    case BSG_ERR_INVALID_QUOTIENT: return "invalid quotient";
    case BSG_ERR_RELATION_VIOLATED: return "relation violated";
    case BSG_ERR_PRECONDITION: return "precondition violated";
    case BSG_ERR_RESOURCE: return "resource limit";
    case BSG_ERR_BOUNDS_EXHAUSTED: return "bounds exhausted";
    case BSG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void bsg_string_free(char* s) { delete[] s; }

bsg_status bsg_group_new(const char* m, const char* n, bsg_group** out) {
  return guarded([&] {
    require(out, "out");
    *out = new bsg_group{bsg::GroupParams::make(int_arg(m, "m"), int_arg(n, "n"))};
  });
}

void bsg_group_free(bsg_group* g) { delete g; }

bsg_status bsg_group_json(const bsg_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    json j = group_json(g->g);
    j["canonical"] = group_json(bsg::canonicalize(g->g));
    *out = dup(j.dump());
  });
}

bsg_status bsg_word_parse(const char* text, bsg_word** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new bsg_word{bsg::parse_word(text)};
  });
}

void bsg_word_free(bsg_word* w) { delete w; }

bsg_status bsg_word_str(const bsg_word* w, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    *out = dup(w->w.str());
  });
}

bsg_status bsg_reduce(const bsg_group* g, const bsg_word* w, const bsg_config* cfg, bsg_word** out) {
  return guarded([&] {
    require(g, "group");
    require(w, "word");
    require(out, "out");
    *out = new bsg_word{bsg::britton_reduce(g->g, w->w, reduce_options(cfg))};
  });
}

bsg_status bsg_is_trivial(const bsg_group* g, const bsg_word* w, const bsg_config* cfg, int* out) {
  return guarded([&] {
    require(g, "group");
    require(w, "word");
    require(out, "out");
    *out = bsg::is_trivial(g->g, w->w, reduce_options(cfg)) ? 1 : 0;
  });
}

bsg_status bsg_are_equal(const bsg_group* g, const bsg_word* x, const bsg_word* y, const bsg_config* cfg, int* out) {
  return guarded([&] {
    require(g, "group");
    require(x, "word");
    require(y, "word");
    require(out, "out");
    *out = bsg::are_equal(g->g, x->w, y->w, reduce_options(cfg)) ? 1 : 0;
  });
}

bsg_status bsg_is_conjugate(const char* n, const bsg_word* x, const bsg_word* y, const bsg_config* cfg, int* out) {
  return guarded([&] {
    require(x, "word");
    require(y, "word");
    require(out, "out");
    bsg::Int nn = int_arg(n, "n");
    bool c = abs(nn) == 1 ? bsg::is_conjugate_unimodular(nn, x->w, y->w, reduce_options(cfg))
                          : bsg::is_conjugate_solvable(nn, x->w, y->w, reduce_options(cfg));
    *out = c ? 1 : 0;
  });
}

bsg_status bsg_conjugacy_form_json(const char* n, const bsg_word* w, const bsg_config* cfg, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    bsg::ConjugacyForm f = bsg::conjugacy_form(int_arg(n, "n"), w->w, reduce_options(cfg));
    *out = dup(json{{"t", int_json(f.t)}, {"r", int_json(f.r)}, {"inverted", f.inverted}}.dump());
  });
}

bsg_status bsg_classify(const bsg_group* g, bsg_property property, const char* const* primes, size_t prime_count,
                        const bsg_config* cfg, bsg_verdict** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    std::vector<bsg::Int> ps;
    for (size_t i = 0; i < prime_count; ++i) ps.push_back(int_arg(primes ? primes[i] : nullptr, "prime"));
    auto one_prime = [&] {
      if (ps.size() != 1) throw bsg::Error(bsg::ErrorCode::InvalidArgument, "property needs exactly one prime");
      return ps[0];
    };
    bsg::Verdict v;
    switch (property) {
      case BSG_PROP_RESIDUALLY_FINITE: v = bsg::is_residually_finite(g->g); break;
      case BSG_PROP_RESIDUALLY_P: v = bsg::is_residually_p(g->g, one_prime()); break;
      case BSG_PROP_RESIDUALLY_PI: v = bsg::is_residually_pi(g->g, bsg::PrimeSet(ps), search_bound(cfg)); break;
      case BSG_PROP_VIRTUALLY_RESIDUALLY_P: v = bsg::is_virtually_residually_p(g->g, one_prime()); break;
      case BSG_PROP_VIRTUALLY_RESIDUALLY_PI: v = bsg::is_virtually_residually_pi(g->g, bsg::PrimeSet(ps)); break;
      case BSG_PROP_CONJUGACY_SEPARABLE: v = bsg::is_conjugacy_separable(g->g); break;
      case BSG_PROP_CONJUGACY_SEPARABLE_PI:
        v = bsg::is_conjugacy_separable_pi(g->g, bsg::PrimeSet(ps), search_bound(cfg));
        break;
      case BSG_PROP_SUBGROUP_SEPARABLE: v = bsg::is_subgroup_separable(g->g); break;
      default: throw bsg::Error(bsg::ErrorCode::InvalidArgument, "unknown property");
    }
    json j;
    j["property"] = property_name(property);
    j["label"] = property_label(property);
    j["group"] = group_json(g->g);
    j["canonical"] = group_json(bsg::canonicalize(g->g));
    if (!ps.empty()) {
      json pj = json::array();
      for (const auto& p : ps) pj.push_back(int_json(p));
      j["primes"] = pj;
    }
    j["value"] = bsg::truth_name(v.value);
    j["reason"] = {{"id", v.reason.id}, {"citation", v.reason.citation}};
    if (v.witness_s) j["witness_s"] = int_json(*v.witness_s);
    if (v.witness_prime) j["witness_prime"] = int_json(*v.witness_prime);
    if (v.witness_word) j["witness_word"] = v.witness_word->str();
    *out = new bsg_verdict{std::move(v), std::move(j)};
  });
}

bsg_truth bsg_verdict_value(const bsg_verdict* v) {
  if (!v) return BSG_UNKNOWN;
  switch (v->v.value) {
    case bsg::Truth::True: return BSG_TRUE;
    case bsg::Truth::False: return BSG_FALSE;
    case bsg::Truth::Unknown: return BSG_UNKNOWN;
  }
  return BSG_UNKNOWN;
}

bsg_status bsg_verdict_json(const bsg_verdict* v, char** out) {
  return guarded([&] {
    require(v, "verdict");
    require(out, "out");
    *out = dup(v->j.dump());
  });
}

void bsg_verdict_free(bsg_verdict* v) { delete v; }

bsg_status bsg_sigma_json(const bsg_group* g, const char* prime, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    auto sd = prime ? bsg::sigma_p_description(g->g, bsg::parse_int(prime)) : bsg::sigma_description(g->g);
    *out = dup(sigma_json(sd).dump());
  });
}

bsg_status bsg_separate_element(const bsg_group* g, const bsg_word* w, const bsg_config* cfg, bsg_witness** out) {
  return guarded([&] {
    require(g, "group");
    require(w, "word");
    require(out, "out");
    *out = new bsg_witness{bsg::separate_element(g->g, w->w, separation_options(cfg))};
  });
}

bsg_status bsg_separate_conjugacy(const char* n, const bsg_word* x, const bsg_word* y, const bsg_config* cfg,
                                  bsg_witness** out) {
  return guarded([&] {
    require(x, "word");
    require(y, "word");
    require(out, "out");
    *out = new bsg_witness{bsg::separate_conjugacy(int_arg(n, "n"), x->w, y->w, separation_options(cfg))};
  });
}

bsg_status bsg_witness_from_json(const char* text, bsg_witness** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw bsg::Error(bsg::ErrorCode::Parse, e.what());
    }
    *out = new bsg_witness{bsg::witness_from_json(j)};
  });
}

bsg_status bsg_witness_to_json(const bsg_witness* wit, char** out) {
  return guarded([&] {
    require(wit, "witness");
    require(out, "out");
    *out = dup(bsg::witness_to_json(wit->w).dump(2));
  });
}

void bsg_witness_free(bsg_witness* wit) { delete wit; }

bsg_status bsg_witness_verify(const bsg_witness* wit, int* ok, char** report) {
  return guarded([&] {
    require(wit, "witness");
    require(ok, "ok");
    bsg::VerifyResult r = bsg::verify(wit->w);
    *ok = r.ok ? 1 : 0;
    if (report) *report = dup(verify_report(r).dump());
  });
}

bsg_status bsg_verify_json(const char* text, int* ok, char** report) {
  return guarded([&] {
    require(text, "text");
    require(ok, "ok");
    bsg::VerifyResult r = bsg::verify_json(text);
    *ok = r.ok ? 1 : 0;
    if (report) *report = dup(verify_report(r).dump());
  });
}

bsg_status bsg_quotient_new(const char* n, uint64_t k, uint64_t l, bsg_quotient** out) {
  return guarded([&] {
    require(out, "out");
    bsg::Int nn = int_arg(n, "n");
    if (!bsg::fits_int64(nn)) throw bsg::Error(bsg::ErrorCode::Resource, "n exceeds 64 bits");
    *out = new bsg_quotient{bsg::FiniteQuotient::make(bsg::to_int64(nn), k, l)};
  });
}

void bsg_quotient_free(bsg_quotient* q) { delete q; }

bsg_status bsg_quotient_json(const bsg_quotient* q, int list_elements, char** out) {
  return guarded([&] {
    require(q, "quotient");
    require(out, "out");
    const auto& h = q->h;
    json j = {{"name", h.str()}, {"n", h.n()}, {"k", h.k()}, {"l", h.l()}, {"order", h.order()},
              {"order_a", h.element_order(h.gen_a())}, {"order_b", h.element_order(h.gen_b())}};
    if (list_elements) {
      if (h.order() > 1'000'000) throw bsg::Error(bsg::ErrorCode::Resource, "too many elements to list");
      json els = json::array();
      for (std::uint64_t i = 0; i < h.k(); ++i)
        for (std::uint64_t jj = 0; jj < h.l(); ++jj)
          els.push_back({{"i", i}, {"j", jj}, {"order", h.element_order({i, jj})}});
      j["elements"] = els;
    }
    *out = dup(j.dump());
  });
}

bsg_status bsg_quotient_bpowers_conjugate(const bsg_quotient* q, const char* r, const char* s, int* out) {
  return guarded([&] {
    require(q, "quotient");
    require(out, "out");
    *out = bsg::bpowers_conjugate(q->h, int_arg(r, "r"), int_arg(s, "s")) ? 1 : 0;
  });
}

}  // extern "C"
