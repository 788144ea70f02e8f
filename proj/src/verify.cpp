#include "sylow/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sylow/arith.hpp"
#include "sylow/catalog.hpp"
#include "sylow/errors.hpp"
#include "sylow/subgroup_ops.hpp"
#include "sylow/sylow_graph.hpp"

namespace sylow {

namespace {

const char* const kCorpus[] = {
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C30",
    "D6", "D8", "D10", "D12", "D14", "D16", "D18", "D20", "D22", "D24",
    "S3", "S4", "S5", "S6", "S7", "A4", "A5", "A6", "A7",
    "AGL1(5)", "AGL1(7)", "AGL1(8)", "AGL1(9)",
    "PSL2(7)", "PSL2(8)", "PSL2(11)", "PSL2(13)", "PSL2(16)", "PSL2(17)", "PSL2(19)",
    "PSL2(23)", "PGL2(5)", "PGL2(7)", "PGL2(9)", "PGL2(11)", "PSL2(8):3", "PSL2(9):2",
    "PSL2(16):2", "PSL3(2)", "PSL3(3)", "M11",
    "S3 x C5", "S3 x S3", "S4 x C2", "A4 x C3", "D10 x C3", "C4 x S3", "D8 x C3",
    "AGL1(5) x C3", "S4 x S3", "A5 x C2", "A4 x A4", "S3 x D10", "C2 x C2 x S3",
    "AGL1(7) x C5", "D14 x C3",
};

std::string join_arrows(const SylowGraph& g) {
  std::string s;
  for (const Arrow& a : g.arrows)
    s += (s.empty() ? "" : ", ") + std::to_string(a.from) + "->" + std::to_string(a.to);
  return "{" + s + "}";
}

std::string diameter_text(const SylowGraph& g) {
  const auto d = diameter(g);
  return d ? std::to_string(*d) : "inf";
}

// p or p + 1 for a prime p = 3 mod 4
bool p3_form(unsigned n) {
  auto ok = [](unsigned p) { return p % 4 == 3 && is_prime(static_cast<std::uint64_t>(p)); };
  return ok(n) || (n > 0 && ok(n - 1));
}

class Runner {
 public:
  explicit Runner(std::string suite) : suite_(std::move(suite)) {}

  template <class F>
  void check(std::string name, F&& body) {
    CheckResult r{suite_, std::move(name), false, {}};
    try {
      std::ostringstream detail;
      r.passed = body(detail);
      r.detail = detail.str();
    } catch (const BudgetExceeded& e) {
      r.detail = std::string("budget exceeded: ") + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

void symmetric_suite(Runner& run, const VerifyOptions& opt) {
  for (unsigned n = 3; n <= opt.symmetric_max; ++n)
    run.check("S" + std::to_string(n) + " connected, diameter <= 2", [&](std::ostream& out) {
      const auto g = sylow_graph(symmetric(n), "S" + std::to_string(n));
      const auto d = diameter(g);
      out << "arrows " << join_arrows(g) << ", diameter " << diameter_text(g);
      return d && *d <= 2;
    });
}

void alternating_suite(Runner& run, const VerifyOptions& opt) {
  run.check("A8 arrows {7->3, 3->2, 5->2}, diameter 3", [&](std::ostream& out) {
    const auto g = sylow_graph(alternating(8), "A8");
    out << "arrows " << join_arrows(g) << ", diameter " << diameter_text(g);
    return g.arrows.size() == 3 && g.has_arrow(7, 3) && g.has_arrow(3, 2) && g.has_arrow(5, 2) &&
           diameter(g) == 3u;
  });
  for (unsigned n = 5; n <= opt.alternating_max; ++n) {
    const bool exact = !p3_form(n);
    run.check("A" + std::to_string(n) + (exact ? " diameter 2" : " connected, diameter <= 3"),
              [&](std::ostream& out) {
                const auto g = sylow_graph(alternating(n), "A" + std::to_string(n));
                const auto d = diameter(g);
                out << "arrows " << join_arrows(g) << ", diameter " << diameter_text(g);
                return d && (exact ? *d == 2 : *d <= 3);
              });
  }
}

void psl2_suite(Runner& run, const VerifyOptions&) {
  for (std::uint64_t q : {7u, 11u, 19u, 23u, 27u})
    run.check("PSL2(" + std::to_string(q) + ") Sylow normalizer of order q(q-1)/2", [&](std::ostream& out) {
      const PermGroup g = psl2(q);
      const std::uint64_t r = prime_power(q).first;
      const BigInt n = normalizer(g, sylow_subgroup(g, r)).order();
      out << "|N| = " << n << ", expected " << q * (q - 1) / 2;
      return n == q * (q - 1) / 2;
    });
  run.check("PSL2(27):3 self-normalizing Sylow 3, arrow 2->3, diameter 2", [&](std::ostream& out) {
    const PermGroup g = psl2_field_extension(27, 3);
    const Subgroup p3 = sylow_subgroup(g, 3);
    const bool self_norm = normalizer(g, p3).order() == p3.order();
    const auto graph = sylow_graph(g, "PSL2(27):3");
    out << "|P| = " << p3.order() << ", self-normalizing " << self_norm << ", arrows " << join_arrows(graph)
        << ", diameter " << diameter_text(graph);
    return self_norm && graph.has_arrow(2, 3) && diameter(graph) == 2u;
  });
}

void sporadic_suite(Runner& run, const VerifyOptions& opt) {
  for (unsigned n : {11u, 12u, 22u})
    run.check("M" + std::to_string(n) + " connected, diameter <= 5", [&](std::ostream& out) {
      const auto g = sylow_graph(mathieu(n), "M" + std::to_string(n));
      const auto d = diameter(g);
      out << "arrows " << join_arrows(g) << ", diameter " << diameter_text(g);
      return d && *d <= 5;
    });
  if (opt.include_m23)
    run.check("M23 diameter exactly 5", [&](std::ostream& out) {
      const auto g = sylow_graph(mathieu(23), "M23");
      out << "arrows " << join_arrows(g) << ", diameter " << diameter_text(g);
      return diameter(g) == 5u;
    });
}

void lemmas_suite(Runner& run, const VerifyOptions& opt) {
  const auto corpus = catalog_corpus(opt.corpus_max_order);
  run.check("Frattini: |N N_G(S)| = |G| for N in {G, G', A_n}", [&](std::ostream& out) {
    std::size_t cases = 0;
    for (const auto& [name, g] : corpus) {
      std::vector<PermGroup> normals{g, derived_series(g).size() > 1 ? derived_series(g)[1].group : g};
      if (name.size() <= 2 && name[0] == 'S') normals.push_back(alternating(static_cast<unsigned>(g.degree())));
      for (const auto& n : normals)
        for (std::uint64_t p : prime_divisors(n.order())) {
          ++cases;
          if (frattini_product_order(g, n, p) != g.order()) {
            out << "violated for " << name << ", p = " << p;
            return false;
          }
        }
    }
    out << cases << " cases";
    return true;
  });
  run.check("automiser orders are prime to p", [&](std::ostream& out) {
    for (const auto& [name, g] : corpus)
      for (const auto& [p, a] : sylow_graph(g, name).automiser_orders)
        if (a % p == 0) {
          out << name << ", p = " << p << ", |A_p| = " << a;
          return false;
        }
    out << corpus.size() << " groups";
    return true;
  });
  run.check("arrows r->s (r odd) of A_n persist in S_n, 5 <= n <= 10", [&](std::ostream& out) {
    for (unsigned n = 5; n <= 10; ++n) {
      const auto a = sylow_graph(alternating(n)), s = sylow_graph(symmetric(n));
      for (const Arrow& arrow : a.arrows)
        if (arrow.from != 2 && !s.has_arrow(arrow.from, arrow.to)) {
          out << "n = " << n << ": " << arrow.from << "->" << arrow.to << " missing";
          return false;
        }
    }
    return true;
  });
  run.check("real central element of a Sylow p-subgroup forces p->2", [&](std::ostream& out) {
    std::size_t witnesses = 0;
    for (const auto& [name, g] : corpus) {
      if (g.order() % 2 != 0) continue;
      const auto graph = sylow_graph(g, name);
      for (std::uint64_t p : graph.vertices) {
        if (p == 2) continue;
        if (!real_central_edge_certificate(g, p)) continue;
        ++witnesses;
        if (!graph.has_arrow(p, 2)) {
          out << name << ": witness for p = " << p << " but no arrow " << p << "->2";
          return false;
        }
      }
    }
    out << witnesses << " witnesses";
    return true;
  });
}

void formations_suite(Runner& run, const VerifyOptions& opt) {
  std::vector<NamedGroup> soluble;
  for (auto& ng : catalog_corpus(opt.soluble_max_order))
    if (is_soluble(ng.group)) soluble.push_back(std::move(ng));
  const auto partitions = default_partitions();
  auto covers = [](const PrimePartition& part, const PermGroup& g) {
    for (std::uint64_t p : prime_divisors(g.order()))
      if (!part.block_of(p)) return false;
    return true;
  };
  run.check("product class <=> commuting Sylow pairs (soluble corpus)", [&](std::ostream& out) {
    std::size_t cases = 0;
    for (const auto& [name, g] : soluble)
      for (const auto& part : partitions) {
        if (!covers(part, g)) continue;
        ++cases;
        const bool a = in_product_class(g, part);
        const bool b = soluble_covering_membership(g, FormationSpec::from_partition(part));
        if (a != b) {
          out << name << ": product class " << a << ", Sylow pairs " << b;
          return false;
        }
      }
    out << cases << " cases over " << soluble.size() << " groups";
    return true;
  });
  run.check("membership <=> Sylow normalizers' membership (soluble corpus)", [&](std::ostream& out) {
    std::size_t cases = 0;
    for (const auto& [name, g] : soluble)
      for (const auto& part : partitions) {
        if (!covers(part, g)) continue;
        ++cases;
        auto report = n_closure_check(g, [&](const PermGroup& h) { return in_product_class(h, part); });
        if (!report.equivalence_holds()) {
          out << name << ": counterexample";
          return false;
        }
      }
    out << cases << " cases, " << partitions.size() << " partitions";
    return true;
  });
}

void arith_suite(Runner& run, const VerifyOptions&) {
  run.check("Zsigmondy primes for prime p <= 50, 2 <= n <= 30", [&](std::ostream& out) {
    std::size_t found = 0;
    for (std::uint64_t p = 2; p <= 50; ++p) {
      if (!is_prime(p)) continue;
      for (unsigned n = 2; n <= 30; ++n) {
        const bool exception = (n == 2 && is_mersenne_prime(p)) || (p == 2 && n == 6);
        const auto r = zsigmondy(p, n);
        if (r.has_value() == exception || (r && (*r % n != 1 || !is_primitive_prime(*r, p, n)))) {
          out << "p = " << p << ", n = " << n;
          return false;
        }
        found += r.has_value();
      }
    }
    out << found << " primitive primes";
    return true;
  });
  struct Case {
    const char* label;
    LieTypeSpec spec;
    std::vector<const char*> groups;
  };
  const Case cases[] = {
      {"L4(2)", LieTypeSpec::make(Family::A, 3, 2, 1), {"PSL4(2)", "A8"}},
      {"L3(2)", LieTypeSpec::make(Family::A, 2, 2, 1), {"PSL3(2)", "PSL2(7)"}},
      {"L3(3)", LieTypeSpec::make(Family::A, 2, 3, 1), {"PSL3(3)"}},
  };
  for (const auto& c : cases)
    for (const char* name : c.groups)
      run.check(std::string("predicted arrows of ") + c.label + " lie in the graph of " + name,
                [&](std::ostream& out) {
                  const auto graph = sylow_graph(parse_group(name), name);
                  for (const auto& a : predicted_edges(c.spec))
                    if (!graph.has_arrow(a.from, a.to)) {
                      out << a.from << "->" << a.to << " (" << justification_tag(a.why) << ") missing";
                      return false;
                    }
                  out << "computed " << join_arrows(graph);
                  return true;
                });
}

}  // namespace

std::vector<NamedGroup> catalog_corpus(const BigInt& max_order) {
  std::vector<NamedGroup> out;
  for (const char* name : kCorpus) {
    PermGroup g = parse_group(name);
    if (g.order() <= max_order) out.push_back({name, std::move(g)});
  }
  std::stable_sort(out.begin(), out.end(), [](const NamedGroup& a, const NamedGroup& b) {
    return a.group.order() != b.group.order() ? a.group.order() < b.group.order() : a.name < b.name;
  });
  return out;
}

std::vector<PrimePartition> default_partitions() {
  return {
      {{{2}, {3}, {5}, {7}, {11}, {13}, {17}, {19}, {23}}},
      {{{2, 3}, {5}, {7}, {11}, {13}, {17}, {19}, {23}}},
      {{{2, 5}, {3}, {7}, {11}, {13}, {17}, {19}, {23}}},
      {{{2}, {3, 5, 7}, {11, 13, 17, 19, 23}}},
      {{{2, 7}, {3, 5}, {11}, {13}, {17}, {19}, {23}}},
      {{{2, 3, 5, 7, 11, 13, 17, 19, 23}}},
  };
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"symmetric", "alternating", "psl2",  "sporadic",
                                              "lemmas",    "formations",  "arith", "all"};
  return names;
}

std::vector<CheckResult> verify_suite(std::string_view suite, const VerifyOptions& options) {
  using Fn = void (*)(Runner&, const VerifyOptions&);
  const std::pair<std::string_view, Fn> suites[] = {
      {"symmetric", symmetric_suite}, {"alternating", alternating_suite}, {"psl2", psl2_suite},
      {"sporadic", sporadic_suite},   {"lemmas", lemmas_suite},           {"formations", formations_suite},
      {"arith", arith_suite},
  };
  std::vector<CheckResult> results;
  bool known = false;
  for (const auto& [name, fn] : suites) {
    if (suite != "all" && suite != name) continue;
    known = true;
    Runner run{std::string(name)};
    fn(run, options);
    auto part = run.take();
    results.insert(results.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (!known) throw std::invalid_argument("unknown suite: " + std::string(suite));
  return results;
}

}  // namespace sylow
