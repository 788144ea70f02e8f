// sylowgraph: compute | verify | predict | formation
//
// Exit codes: 0 success, 1 a verification or cross-check failed, 2 malformed
// input (group spec, flags, unsupported family or partition), 3 budget exceeded, 4 any other error.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sylow/arith.hpp"
#include "sylow/catalog.hpp"
#include "sylow/errors.hpp"
#include "sylow/formation.hpp"
#include "sylow/graph_io.hpp"
#include "sylow/subgroup_ops.hpp"
#include "sylow/sylow_graph.hpp"
#include "sylow/verify.hpp"

namespace {

using namespace sylow;

constexpr int kFailed = 1, kBadInput = 2, kBudget = 3, kError = 4;

std::string set_text(const std::set<std::uint64_t>& s) {
  std::string out;
  for (auto p : s) out += (out.empty() ? "" : ", ") + std::to_string(p);
  return "{" + out + "}";
}

int cmd_compute(const std::string& spec, const std::string& format) {
  const auto graph = sylow_graph(parse_group(spec), spec);
  if (format == "json")
    std::cout << to_json(graph) << "\n";
  else if (format == "dot")
    std::cout << to_dot(graph);
  else
    std::cout << to_table(graph);
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, bool json_out) {
  const auto results = verify_suite(suite, opt);
  bool ok = true;
  nlohmann::json report = nlohmann::json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (json_out)
      report.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    else
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " -- " << r.detail << "\n";
  }
  if (json_out)
    std::cout << nlohmann::json{{"passed", ok}, {"checks", report}}.dump(2) << "\n";
  else
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ok ? 0 : kFailed;
}

struct PredictArgs {
  std::string type;
  unsigned l = 0;
  std::string eps;
  std::uint64_t q = 0;
  bool cross_check = false;
};

int cmd_predict(const PredictArgs& a) {
  auto family = parse_family(a.type);
  if (!family) throw std::invalid_argument("unknown family " + a.type);
  const bool minus = a.eps == "-";
  if (minus && *family == Family::A) family = Family::A2;
  if (minus && *family == Family::D) family = Family::D2;
  if (minus && *family == Family::E6) family = Family::E6_2;
  const auto [r, t] = prime_power(BigInt(a.q));

  // --l is the parameter of the relevant theorem: the matrix dimension for
  // A/2A, and l in P Omega_{4l+2} for D/2D. E6 ignores it.
  unsigned rank = 0;
  switch (*family) {
    case Family::A:
    case Family::A2:
      if (a.l < 3) throw std::invalid_argument("--l (dimension) must be > 2 for linear groups");
      rank = a.l - 1;
      break;
    case Family::D:
    case Family::D2:
      if (a.l < 1) throw std::invalid_argument("--l must be >= 1 for orthogonal groups");
      rank = 2 * a.l + 1;
      break;
    case Family::E6:
    case Family::E6_2: rank = 6; break;
    default: throw std::invalid_argument("predictions exist only for A, 2A, D, 2D, E6, 2E6");
  }
  const LieTypeSpec spec = LieTypeSpec::make(*family, rank, r, t);
  const bool exceptional = spec.family == Family::E6 || spec.family == Family::E6_2;
  std::cout << family_name(spec.family) << (exceptional ? "" : std::to_string(rank)) << "(" << spec.q << ")\n";
  std::cout << "primes " << set_text(lie_prime_set(spec)) << "\n";

  std::optional<SigmaPartition> part;
  if (*family == Family::A || *family == Family::A2)
    part = sigma_partition_linear(a.l, spec.eps, r, t);
  if (*family == Family::D || *family == Family::D2)
    part = sigma_partition_orthogonal(a.l, spec.eps, r, t);
  if (part) {
    std::cout << "sigma1 (primitive) " << set_text(part->primitive) << "\n";
    std::cout << "sigma2             " << set_text(part->other) << "\n";
    std::cout << "sigma3 {r, 2}      " << set_text(part->defining_and_two) << "\n";
    if (part->primitive.empty()) {
      const unsigned n = part->kind == PartitionKind::Linear ? 0 : (spec.eps == Sign::Plus ? 2 * a.l + 1 : 4 * a.l + 2);
      std::cout << "note: no primitive primes";
      if (n) std::cout << " for (" << spec.q << ", " << n << ") (Zsigmondy exception)";
      std::cout << "\n";
    }
  }
  const auto arrows = predicted_edges(spec);
  for (const auto& arrow : arrows)
    std::cout << arrow.from << " -> " << arrow.to << "  [" << justification_tag(arrow.why) << "]\n";

  if (!a.cross_check) return 0;
  std::string instance;
  if (spec.family == Family::A && a.l <= 4) instance = "PSL" + std::to_string(a.l) + "(" + std::to_string(a.q) + ")";
  if (spec.family == Family::D && a.l == 1) instance = "PSL4(" + std::to_string(a.q) + ")";  // D3 = A3
  if (instance.empty()) {
    std::cout << "cross-check: no constructible instance\n";
    return 0;
  }
  const auto graph = sylow_graph(parse_group(instance), instance);
  bool ok = true;
  for (const auto& arrow : arrows)
    if (!graph.has_arrow(arrow.from, arrow.to)) {
      ok = false;
      std::cout << "cross-check: " << arrow.from << " -> " << arrow.to << " missing from " << instance << "\n";
    }
  std::cout << "cross-check against " << instance << ": " << (ok ? "sound" : "FAILED") << "\n";
  return ok ? 0 : kFailed;
}

// "2,3|5|7" -> blocks
PrimePartition parse_partition(const std::string& text) {
  PrimePartition part;
  std::stringstream blocks(text);
  std::string block;
  while (std::getline(blocks, block, '|')) {
    PrimeSet set;
    std::stringstream primes(block);
    std::string item;
    while (std::getline(primes, item, ',')) {
      try {
        std::size_t used = 0;
        const auto p = std::stoull(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        set.insert(p);
      } catch (const std::logic_error&) {
        throw ParseError("bad prime '" + item + "' in partition", text.find(item));
      }
    }
    part.blocks.push_back(std::move(set));
  }
  if (!part.valid()) throw ParseError("blocks must be disjoint nonempty sets of primes", 0);
  return part;
}

int cmd_formation(const std::string& group_spec, const std::string& partition_text) {
  const PermGroup g = parse_group(group_spec);
  const PrimePartition part = parse_partition(partition_text);
  const FormationSpec spec = FormationSpec::from_partition(part);
  std::cout << "group " << group_spec << "  order " << g.order() << "\n";
  std::cout << "components";
  for (const auto& c : prime_components(spec)) std::cout << " " << set_text(c);
  std::cout << "\n";
  const bool member = in_product_class(g, part);
  std::cout << "direct product of block groups: " << (member ? "yes" : "no") << "\n";
  const bool soluble = is_soluble(g);
  int status = 0;
  if (soluble) {
    const bool cover = soluble_covering_membership(g, spec);
    std::cout << "commuting Sylow pairs across blocks: " << (cover ? "yes" : "no") << "\n";
    if (cover != member) status = kFailed;
  } else {
    std::cout << "group is not soluble; Sylow-pair characterization skipped\n";
  }
  const auto report = n_closure_check(g, [&](const PermGroup& h) { return in_product_class(h, part); });
  for (const auto& [p, in] : report.normalizer_member)
    std::cout << "  N_G(P_" << p << ") order " << report.normalizer_order.at(p) << ": " << (in ? "in" : "not in")
              << " class\n";
  std::cout << "Sylow normalizer equivalence: " << (report.equivalence_holds() ? "holds" : "FAILS") << "\n";
  if (!report.equivalence_holds()) status = kFailed;
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow graphs of permutation groups"};
  app.require_subcommand(1);
  std::uint64_t max_order = budget().max_elements, max_class = budget().max_class_size;
  app.add_option("--max-order", max_order, "element/leaf budget for searches");
  app.add_option("--max-class-size", max_class, "conjugacy class size budget");

  std::string group, format = "table";
  auto* compute = app.add_subcommand("compute", "compute the Sylow graph of a group");
  compute->add_option("group", group, "group, e.g. A8, PSL2(27):3, S3 x C5")->required();
  compute->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "table"}));

  std::string suite = "all", verify_format = "text";
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember(verify_suite_names()));
  verify->add_flag("--include-m23", vopt.include_m23, "also check that M23 has diameter 5");
  verify->add_option("--symmetric-max", vopt.symmetric_max);
  verify->add_option("--alternating-max", vopt.alternating_max);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  PredictArgs pargs;
  auto* predict = app.add_subcommand("predict", "predict arrows for a Lie-type family");
  predict->add_option("--type", pargs.type, "A, 2A, D, 2D, E6, 2E6")->required();
  predict->add_option("--l", pargs.l, "dimension (A/2A) or l of P Omega_{4l+2} (D/2D)");
  predict->add_option("--eps", pargs.eps, "+ or -")->check(CLI::IsMember({"+", "-"}));
  predict->add_option("--q", pargs.q, "prime power")->required();
  predict->add_flag("--cross-check", pargs.cross_check, "compare with a constructed instance");

  std::string fgroup, partition;
  auto* formation = app.add_subcommand("formation", "test product-class membership");
  formation->add_option("group", fgroup)->required();
  formation->add_option("--partition", partition, "blocks of primes, e.g. 2,3|5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    set_budget({max_order, max_class});
    if (*compute) return cmd_compute(group, format);
    if (*verify) return cmd_verify(suite, vopt, verify_format == "json");
    if (*predict) return cmd_predict(pargs);
    if (*formation) return cmd_formation(fgroup, partition);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
