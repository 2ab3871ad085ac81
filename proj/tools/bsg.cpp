// Command-line front end. Talks to the library only through the C interface.

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsg/bsg.h"

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

constexpr const char* kGrammar =
    "word grammar: a, b, A (= a^-1), B (= b^-1), each optionally followed by ^ and a signed\n"
    "integer; whitespace and '*' separate tokens; '1' is the identity; ( ... )^k and [u, v]\n"
    "(= u^-1 v^-1 u v) are also accepted. Example: \"a^-1 b^2 a b^-3\".";

struct Failure {
  bsg_status status;
  std::string message;
};

void check(bsg_status s) {
  if (s != BSG_OK) throw Failure{s, bsg_last_error()};
}

struct Deleter {
  void operator()(bsg_group* p) const { bsg_group_free(p); }
  void operator()(bsg_word* p) const { bsg_word_free(p); }
  void operator()(bsg_verdict* p) const { bsg_verdict_free(p); }
  void operator()(bsg_witness* p) const { bsg_witness_free(p); }
  void operator()(bsg_quotient* p) const { bsg_quotient_free(p); }
  void operator()(char* p) const { bsg_string_free(p); }
};

template <class T>
using Handle = std::unique_ptr<T, Deleter>;

std::string take(char* s) {
  Handle<char> h(s);
  return s ? std::string(s) : std::string();
}

Handle<bsg_group> group(const std::string& m, const std::string& n) {
  bsg_group* g = nullptr;
  check(bsg_group_new(m.c_str(), n.c_str(), &g));
  return Handle<bsg_group>(g);
}

Handle<bsg_word> word(const std::string& text) {
  bsg_word* w = nullptr;
  check(bsg_word_parse(text.c_str(), &w));
  return Handle<bsg_word>(w);
}

std::string word_str(const bsg_word* w) {
  char* s = nullptr;
  check(bsg_word_str(w, &s));
  return take(s);
}

struct Settings {
  bool json = false;
  bool trace = false;
  std::string search_bound = "1000000";
  std::size_t max_degree = 8;
  std::size_t bit_guard = 1'000'000;

  bsg_config config() const {
    bsg_config cfg;
    bsg_config_init(&cfg);
    cfg.search_bound = search_bound.c_str();
    cfg.max_degree = max_degree;
    cfg.bit_guard = bit_guard;
    return cfg;
  }
};

void print(const Settings& s, const json& j, const std::string& text) {
  if (s.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int yes_no(bool b) { return b ? kExitYes : kExitNo; }

std::string bool_str(bool b) { return b ? "true" : "false"; }

int emit_witness(const Settings& s, bsg_witness* raw) {
  Handle<bsg_witness> wit(raw);
  char* out = nullptr;
  check(bsg_witness_to_json(wit.get(), &out));
  std::string text = take(out);
  if (s.trace) {
    const json j = json::parse(text);
    for (const auto& line : j["meta"]["search_trace"]) std::cerr << "trace: " << line.get<std::string>() << "\n";
  }
  std::cout << text << "\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Baumslag-Solitar groups G(m,n) = <a, b | a^-1 b^m a = b^n>"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(kGrammar);
  Settings settings;
  app.add_flag("--json", settings.json, "Print JSON instead of text");
  app.add_flag("--trace", settings.trace, "Print search decisions to stderr");
  app.add_option("--search-bound", settings.search_bound, "Largest pi-number tried in F_pi searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", settings.max_degree, "Largest degree in permutation quotient searches")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  app.add_option("--bit-guard", settings.bit_guard, "Largest b-exponent width (bits) during reduction")
      ->check(CLI::PositiveNumber);

  std::string m, n, w1, w2, p, file;
  std::vector<std::string> pi;
  bool virt = false, conj_sep = false, subgroup_sep = false, list = false;
  std::uint64_t k = 0, l = 0;

  auto* classify = app.add_subcommand("classify", "Decide a residual or separability property");
  classify->add_option("m", m)->required();
  classify->add_option("n", n)->required();
  auto* p_opt = classify->add_option("--p", p, "A prime p: F_p-residuality");
  auto* pi_opt = classify->add_option("--pi", pi, "Comma-separated primes: F_pi-residuality")->delimiter(',');
  p_opt->excludes(pi_opt);
  classify->add_flag("--virtual", virt, "Virtual version (needs --p or --pi)");
  classify->add_flag("--conjugacy", conj_sep, "Conjugacy separability (F_pi with --pi)");
  classify->add_flag("--subgroup", subgroup_sep, "Subgroup separability");

  auto* reduce = app.add_subcommand("reduce", "Britton-reduce a word");
  auto* trivial = app.add_subcommand("trivial", "Decide whether a word is trivial");
  auto* separate = app.add_subcommand("separate", "Finite quotient in which a word survives");
  for (auto* sub : {reduce, trivial, separate}) {
    sub->add_option("m", m)->required();
    sub->add_option("n", n)->required();
    sub->add_option("word", w1)->required();
  }
  auto* equal = app.add_subcommand("equal", "Decide whether two words are equal");
  equal->add_option("m", m)->required();
  equal->add_option("n", n)->required();
  equal->add_option("w1", w1)->required();
  equal->add_option("w2", w2)->required();
  auto* conj = app.add_subcommand("conj", "Decide conjugacy in G(1,n)");
  auto* separate_conj = app.add_subcommand("separate-conj", "Finite quotient separating two conjugacy classes of G(1,n)");
  for (auto* sub : {conj, separate_conj}) {
    sub->add_option("n", n)->required();
    sub->add_option("w1", w1)->required();
    sub->add_option("w2", w2)->required();
  }
  auto* sigma = app.add_subcommand("sigma", "Normal generators of the finite (or finite p-) residual");
  sigma->add_option("m", m)->required();
  sigma->add_option("n", n)->required();
  sigma->add_option("--p", p, "A prime p");
  auto* quotient = app.add_subcommand("quotient", "The metacyclic group H_n(k,l)");
  quotient->add_option("n", n)->required();
  quotient->add_option("k", k)->required()->check(CLI::PositiveNumber);
  quotient->add_option("l", l)->required()->check(CLI::PositiveNumber);
  auto* list_opt = quotient->add_flag("--list", list, "List all elements a^i b^j");
  std::vector<std::string> conj_pair;
  auto* conj_opt = quotient->add_option("--conj", conj_pair, "Decide whether b^R and b^S are conjugate")->expected(2);
  list_opt->excludes(conj_opt);
  auto* verify = app.add_subcommand("verify-witness", "Check a witness JSON file ('-' for stdin)");
  verify->add_option("file", file)->required();

  for (auto* sub : app.get_subcommands({})) sub->footer(kGrammar);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const bsg_config cfg = settings.config();

    if (classify->parsed()) {
      auto g = group(m, n);
      bsg_property prop = BSG_PROP_RESIDUALLY_FINITE;
      std::vector<std::string> primes;
      if (!p.empty()) primes = {p};
      if (!pi.empty()) primes = pi;
      if (virt && primes.empty()) {
        std::cerr << "error: --virtual needs --p or --pi\n";
        return kExitUsage;
      }
      if (subgroup_sep) prop = BSG_PROP_SUBGROUP_SEPARABLE;
      else if (conj_sep) prop = pi.empty() ? BSG_PROP_CONJUGACY_SEPARABLE : BSG_PROP_CONJUGACY_SEPARABLE_PI;
      else if (!p.empty()) prop = virt ? BSG_PROP_VIRTUALLY_RESIDUALLY_P : BSG_PROP_RESIDUALLY_P;
      else if (!pi.empty()) prop = virt ? BSG_PROP_VIRTUALLY_RESIDUALLY_PI : BSG_PROP_RESIDUALLY_PI;
      if ((prop == BSG_PROP_CONJUGACY_SEPARABLE || prop == BSG_PROP_SUBGROUP_SEPARABLE) && !primes.empty()) {
        std::cerr << "error: this property takes no primes\n";
        return kExitUsage;
      }
      std::vector<const char*> cprimes;
      for (const auto& q : primes) cprimes.push_back(q.c_str());
      bsg_verdict* raw = nullptr;
      check(bsg_classify(g.get(), prop, cprimes.data(), cprimes.size(), &cfg, &raw));
      Handle<bsg_verdict> v(raw);
      char* out = nullptr;
      check(bsg_verdict_json(v.get(), &out));
      json j = json::parse(take(out));
      std::string detail = j.contains("witness_s") ? "s=" + j["witness_s"].dump() : j["reason"]["citation"].get<std::string>();
      print(settings, j, j["label"].get<std::string>() + ": " + j["value"].get<std::string>() + " (" + detail + ")");
      switch (bsg_verdict_value(v.get())) {
        case BSG_TRUE: return kExitYes;
        case BSG_FALSE: return kExitNo;
        default: return kExitUnknown;
      }
    }

    if (reduce->parsed() || trivial->parsed()) {
      auto g = group(m, n);
      auto w = word(w1);
      bsg_word* raw = nullptr;
      check(bsg_reduce(g.get(), w.get(), &cfg, &raw));
      Handle<bsg_word> red(raw);
      std::string rs = word_str(red.get());
      bool is_trivial = rs == "1";
      json j = {{"input", word_str(w.get())}, {"reduced", rs}, {"trivial", is_trivial}};
      if (reduce->parsed()) {
        print(settings, j, rs);
        return kExitYes;
      }
      print(settings, j, "trivial: " + bool_str(is_trivial));
      return yes_no(is_trivial);
    }

    if (equal->parsed()) {
      auto g = group(m, n);
      auto x = word(w1), y = word(w2);
      int eq = 0;
      check(bsg_are_equal(g.get(), x.get(), y.get(), &cfg, &eq));
      print(settings, {{"w1", word_str(x.get())}, {"w2", word_str(y.get())}, {"equal", eq != 0}},
            "equal: " + bool_str(eq));
      return yes_no(eq);
    }

    if (conj->parsed()) {
      auto x = word(w1), y = word(w2);
      int c = 0;
      check(bsg_is_conjugate(n.c_str(), x.get(), y.get(), &cfg, &c));
      json j = {{"n", n}, {"w1", word_str(x.get())},
                {"w2", word_str(y.get())}, {"conjugate", c != 0}};
      char* f1 = nullptr;
      char* f2 = nullptr;
      if (bsg_conjugacy_form_json(n.c_str(), x.get(), &cfg, &f1) == BSG_OK &&
          bsg_conjugacy_form_json(n.c_str(), y.get(), &cfg, &f2) == BSG_OK)
        j["forms"] = {json::parse(take(f1)), json::parse(take(f2))};
      else
        take(f1);
      print(settings, j, "conjugate: " + bool_str(c));
      return yes_no(c);
    }

    if (separate->parsed()) {
      auto g = group(m, n);
      auto w = word(w1);
      bsg_witness* raw = nullptr;
      check(bsg_separate_element(g.get(), w.get(), &cfg, &raw));
      return emit_witness(settings, raw);
    }

    if (separate_conj->parsed()) {
      auto x = word(w1), y = word(w2);
      bsg_witness* raw = nullptr;
      check(bsg_separate_conjugacy(n.c_str(), x.get(), y.get(), &cfg, &raw));
      return emit_witness(settings, raw);
    }

    if (sigma->parsed()) {
      auto g = group(m, n);
      char* out = nullptr;
      check(bsg_sigma_json(g.get(), p.empty() ? nullptr : p.c_str(), &out));
      json j = json::parse(take(out));
      std::string name = p.empty() ? "sigma" : "sigma_" + p;
      std::string text = name + "(G(" + j["group"]["m"].dump() + "," + j["group"]["n"].dump() +
                         ")) = " + j["description"].get<std::string>();
      if (j.contains("case")) text += " (case " + j["case"].dump() + ")";
      print(settings, j, text);
      return kExitYes;
    }

    if (quotient->parsed()) {
      bsg_quotient* raw = nullptr;
      check(bsg_quotient_new(n.c_str(), k, l, &raw));
      Handle<bsg_quotient> h(raw);
      char* out = nullptr;
      check(bsg_quotient_json(h.get(), list ? 1 : 0, &out));
      json j = json::parse(take(out));
      const std::string name = j["name"].get<std::string>();
      if (!conj_pair.empty()) {
        int c = 0;
        check(bsg_quotient_bpowers_conjugate(h.get(), conj_pair[0].c_str(), conj_pair[1].c_str(), &c));
        json cj = {{"quotient", name}, {"r", conj_pair[0]}, {"s", conj_pair[1]}, {"conjugate", c != 0}};
        print(settings, cj, "b^" + conj_pair[0] + " ~ b^" + conj_pair[1] + " in " + name + ": " + bool_str(c));
        return yes_no(c);
      }
      std::ostringstream text;
      text << name << ": order " << j["order"] << ", |a| = " << j["order_a"] << ", |b| = " << j["order_b"];
      if (list)
        for (const auto& e : j["elements"])
          text << "\n(" << e["i"] << "," << e["j"] << ")  order " << e["order"];
      print(settings, j, text.str());
      return kExitYes;
    }

    if (verify->parsed()) {
      std::string text;
      if (file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(file);
        if (!in) {
          std::cerr << "error: cannot read " << file << "\n";
          return kExitUsage;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      int ok = 0;
      char* out = nullptr;
      check(bsg_verify_json(text.c_str(), &ok, &out));
      json j = json::parse(take(out));
      std::string line = ok ? "witness verified: " + j["detail"].get<std::string>()
                            : "witness rejected (" + j["failed_check"].get<std::string>() +
                                  "): " + j["detail"].get<std::string>();
      print(settings, j, line);
      return yes_no(ok);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << bsg_status_name(f.status) << ": " << f.message << "\n";
    if (f.status == BSG_ERR_PARSE) std::cerr << kGrammar << "\n";
    return (f.status == BSG_ERR_BOUNDS_EXHAUSTED || f.status == BSG_ERR_RESOURCE) ? kExitUnknown : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
