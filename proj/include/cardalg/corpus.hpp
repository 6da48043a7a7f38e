#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cardalg/abgroup.hpp"
#include "cardalg/finring.hpp"

namespace cardalg {

/// Corpus parameters. Every field has a default; a JSON config may set any
/// subset of them by name.
struct CorpusConfig {
  std::uint32_t zmod_max = 100;            // Z/n for 2 <= n <= zmod_max
  std::uint32_t product_max_order = 200;   // Z/a x Z/b, a <= b, ab <= this
  std::vector<std::uint32_t> polyquot_primes{2, 3, 5};
  std::uint32_t polyquot_max_degree = 3;   // every monic modulus of degree 1..this
  std::uint32_t idealize_max_order = 64;   // Z/n x M, M a Z/n-module
  std::uint32_t monoid_ring_max_order = 256;
  std::vector<std::string> extra_rings{"prod(Z/2, Z/2, Z/2)", "prod(Z/2, GF(2)[x]/(x^2+x+1))",
                                       "prod(Z/4, GF(3)[x]/(x^2))", "monoidring(Z/2, LZ2)"};
  std::uint32_t group_max_order = 64;
  std::vector<std::uint32_t> prufer_primes{2, 3, 5, 7};
  std::uint32_t prufer_max_exponent = 4;
  std::uint32_t group_spec_samples = 50;
  std::uint64_t seed = 20240601;
  std::size_t ring_cap = 4096;
  std::size_t baer_cap = 64;
  std::size_t subring_cap = 32;
  bool verify_axioms = true;
  std::size_t threads = 0;  // 0: hardware concurrency

  /// Throws std::invalid_argument on unknown keys or out-of-range values.
  static CorpusConfig from_json(const nlohmann::json& j);
  /// A config that generates nothing.
  static CorpusConfig empty();
  nlohmann::json to_json() const;
};

struct CorpusReport {
  nlohmann::json json;
  std::size_t failures = 0;
  std::size_t expected_negatives = 0;
  std::string summary;  // human-readable table
};

/// Ring specs generated by a config, in report order.
std::vector<std::string> corpus_ring_specs(const CorpusConfig& config);
/// Factor lists (prime powers, ascending) of every abelian group of order <= n, up to isomorphism.
std::vector<std::vector<std::uint64_t>> abelian_groups_up_to(std::uint32_t n);
/// Deterministic sample of group specs.
std::vector<GroupSpec> sample_group_specs(std::size_t count, std::uint64_t seed);

/// Runs every check on one ring and returns its JSON record; `failures`
/// lists violated invariants, `expected_negative` marks a recorded
/// non-self-injective ring or a rejected non-commutative monoid.
nlohmann::json check_ring(const std::string& spec, const CorpusConfig& config,
                          std::vector<std::string>& failures, bool& expected_negative);

CorpusReport run_corpus(const CorpusConfig& config);

}  // namespace cardalg
