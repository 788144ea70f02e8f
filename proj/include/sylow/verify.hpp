#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sylow/formation.hpp"
#include "sylow/perm_group.hpp"

namespace sylow {

struct NamedGroup {
  std::string name;  // group mini-language
  PermGroup group;
};

/// Catalog groups (cyclic, dihedral, symmetric, alternating, affine, PSL2/PGL2,
/// PSL3, Mathieu and small direct products) of order at most `max_order`,
/// sorted by order then name.
std::vector<NamedGroup> catalog_corpus(const BigInt& max_order);

/// Partitions used for the formation checks; they cover every prime dividing
/// the order of a corpus group.
std::vector<PrimePartition> default_partitions();

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned symmetric_max = 12;
  unsigned alternating_max = 12;
  bool include_m23 = false;
  BigInt corpus_max_order = 10'000;
  BigInt soluble_max_order = 2'000;
};

/// Suites: symmetric, alternating, psl2, sporadic, lemmas, formations, arith,
/// all. Throws std::invalid_argument for anything else. Budget errors inside a
/// check are reported as failed checks.
std::vector<CheckResult> verify_suite(std::string_view suite, const VerifyOptions& options = {});

const std::vector<std::string>& verify_suite_names();

}  // namespace sylow
