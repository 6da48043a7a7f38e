#include "cardalg/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cardalg/algebra_card.hpp"
#include "cardalg/parse_util.hpp"

namespace cardalg {

using nlohmann::json;

// -------------------------------------------------------------------- config

CorpusConfig CorpusConfig::empty() {
  CorpusConfig c;
  c.zmod_max = 0;
  c.product_max_order = 0;
  c.polyquot_primes.clear();
  c.polyquot_max_degree = 0;
  c.idealize_max_order = 0;
  c.monoid_ring_max_order = 0;
  c.extra_rings.clear();
  c.group_max_order = 0;
  c.prufer_primes.clear();
  c.prufer_max_exponent = 0;
  c.group_spec_samples = 0;
  return c;
}

json CorpusConfig::to_json() const {
  return {{"zmod_max", zmod_max},
          {"product_max_order", product_max_order},
          {"polyquot_primes", polyquot_primes},
          {"polyquot_max_degree", polyquot_max_degree},
          {"idealize_max_order", idealize_max_order},
          {"monoid_ring_max_order", monoid_ring_max_order},
          {"extra_rings", extra_rings},
          {"group_max_order", group_max_order},
          {"prufer_primes", prufer_primes},
          {"prufer_max_exponent", prufer_max_exponent},
          {"group_spec_samples", group_spec_samples},
          {"seed", seed},
          {"ring_cap", ring_cap},
          {"baer_cap", baer_cap},
          {"subring_cap", subring_cap},
          {"verify_axioms", verify_axioms},
          {"threads", threads}};
}

CorpusConfig CorpusConfig::from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("corpus config must be a JSON object");
  CorpusConfig c;
  const json defaults = c.to_json();
  for (const auto& [key, value] : j.items())
    if (!defaults.contains(key)) throw std::invalid_argument("unknown corpus config key '" + key + "'");
  json merged = defaults;
  merged.update(j);
  try {
    c.zmod_max = merged.at("zmod_max").get<std::uint32_t>();
    c.product_max_order = merged.at("product_max_order").get<std::uint32_t>();
    c.polyquot_primes = merged.at("polyquot_primes").get<std::vector<std::uint32_t>>();
    c.polyquot_max_degree = merged.at("polyquot_max_degree").get<std::uint32_t>();
    c.idealize_max_order = merged.at("idealize_max_order").get<std::uint32_t>();
    c.monoid_ring_max_order = merged.at("monoid_ring_max_order").get<std::uint32_t>();
    c.extra_rings = merged.at("extra_rings").get<std::vector<std::string>>();
    c.group_max_order = merged.at("group_max_order").get<std::uint32_t>();
    c.prufer_primes = merged.at("prufer_primes").get<std::vector<std::uint32_t>>();
    c.prufer_max_exponent = merged.at("prufer_max_exponent").get<std::uint32_t>();
    c.group_spec_samples = merged.at("group_spec_samples").get<std::uint32_t>();
    c.seed = merged.at("seed").get<std::uint64_t>();
    c.ring_cap = merged.at("ring_cap").get<std::size_t>();
    c.baer_cap = merged.at("baer_cap").get<std::size_t>();
    c.subring_cap = merged.at("subring_cap").get<std::size_t>();
    c.verify_axioms = merged.at("verify_axioms").get<bool>();
    c.threads = merged.at("threads").get<std::size_t>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad corpus config value: ") + e.what());
  }
  auto bound = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("corpus config out of bounds: ") + what);
  };
  bound(c.ring_cap >= 2 && c.ring_cap <= 4096, "ring_cap must be in [2, 4096]");
  bound(c.baer_cap <= 64, "baer_cap must be <= 64");
  bound(c.subring_cap <= 32, "subring_cap must be <= 32");
  bound(c.zmod_max <= c.ring_cap, "zmod_max exceeds ring_cap");
  bound(c.product_max_order <= c.ring_cap, "product_max_order exceeds ring_cap");
  bound(c.idealize_max_order <= c.ring_cap, "idealize_max_order exceeds ring_cap");
  bound(c.monoid_ring_max_order <= c.ring_cap, "monoid_ring_max_order exceeds ring_cap");
  bound(c.polyquot_max_degree <= 8, "polyquot_max_degree must be <= 8");
  for (auto p : c.polyquot_primes) bound(p >= 2 && p <= 13, "polyquot primes must be in [2, 13]");
  bound(c.group_max_order <= 128, "group_max_order must be <= 128");
  for (auto p : c.prufer_primes) bound(p >= 2 && p <= 7, "prufer primes must be <= 7");
  bound(c.prufer_max_exponent <= 4, "prufer_max_exponent must be <= 4");
  bound(c.group_spec_samples <= 10000, "group_spec_samples must be <= 10000");
  bound(c.threads <= 256, "threads must be <= 256");
  return c;
}

// ---------------------------------------------------------------- generation

namespace {

std::vector<std::uint32_t> divisors_from_2(std::uint32_t n) {
  std::vector<std::uint32_t> d;
  for (std::uint32_t k = 2; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

void module_lists(const std::vector<std::uint32_t>& divs, std::uint64_t budget, std::size_t start,
                  std::vector<std::uint32_t>& cur, std::vector<std::vector<std::uint32_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (std::size_t i = start; i < divs.size(); ++i) {
    if (divs[i] > budget) break;
    cur.push_back(divs[i]);
    module_lists(divs, budget / divs[i], i, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t n, std::uint32_t max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t k = std::min(n, max_part); k >= 1; --k)
    for (auto rest : partitions(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(std::move(rest));
    }
  return out;
}

}  // namespace

std::vector<std::string> corpus_ring_specs(const CorpusConfig& c) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& s) {
    if (seen.insert(s).second) out.push_back(s);
  };
  for (std::uint32_t n = 2; n <= c.zmod_max; ++n) add(RingSpec::zmod(n).to_string());
  for (std::uint32_t a = 2; a * a <= c.product_max_order; ++a)
    for (std::uint32_t b = a; a * b <= c.product_max_order; ++b)
      add(RingSpec::product({RingSpec::zmod(a), RingSpec::zmod(b)}).to_string());
  for (std::uint32_t p : c.polyquot_primes)
    for (std::uint32_t d = 1; d <= c.polyquot_max_degree; ++d) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= p;
      if (count > c.ring_cap) break;
      for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<std::uint32_t> mod;
        for (std::uint64_t x = k, i = 0; i < d; ++i, x /= p) mod.push_back(static_cast<std::uint32_t>(x % p));
        mod.push_back(1);
        add(RingSpec::poly_quot(p, mod).to_string());
      }
    }
  for (std::uint32_t n = 2; 2 * n <= c.idealize_max_order; ++n) {
    std::vector<std::vector<std::uint32_t>> lists;
    std::vector<std::uint32_t> cur;
    module_lists(divisors_from_2(n), c.idealize_max_order / n, 0, cur, lists);
    std::sort(lists.begin(), lists.end());
    for (auto& l : lists) {
      std::sort(l.begin(), l.end(), std::greater<>());
      add(RingSpec::idealize(RingSpec::zmod(n), ModuleSpec{l, std::nullopt}).to_string());
    }
  }
  const std::vector<RingSpec> bases{RingSpec::zmod(2), RingSpec::zmod(3), RingSpec::zmod(4), RingSpec::zmod(5),
                                    RingSpec::zmod(6), RingSpec::poly_quot(2, {1, 1, 1})};
  for (const RingSpec& b : bases)
    for (const char* m : {"C1", "C2", "C3", "C4", "N2", "N3", "N4"}) {
      RingSpec s = RingSpec::monoid_ring(b, MonoidTable::parse(m));
      if (s.order() <= c.monoid_ring_max_order) add(s.to_string());
    }
  for (const std::string& s : c.extra_rings) add(s);
  return out;
}

std::vector<std::vector<std::uint64_t>> abelian_groups_up_to(std::uint32_t n) {
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint32_t m = 1; m <= n; ++m) {
    // prime factorization of m
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pe;
    std::uint32_t x = m;
    for (std::uint32_t p = 2; x > 1; ++p) {
      std::uint32_t e = 0;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      if (e) pe.emplace_back(p, e);
    }
    std::vector<std::vector<std::uint64_t>> groups{{}};
    for (auto [p, e] : pe) {
      std::vector<std::vector<std::uint64_t>> next;
      for (const auto& g : groups)
        for (const auto& part : partitions(e, e)) {
          auto h = g;
          for (auto k : part) {
            std::uint64_t q = 1;
            for (std::uint32_t i = 0; i < k; ++i) q *= p;
            h.push_back(q);
          }
          next.push_back(std::move(h));
        }
      groups = std::move(next);
    }
    for (auto& g : groups) {
      std::sort(g.begin(), g.end());
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<GroupSpec> sample_group_specs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t k) { return rng() % k; };
  const std::uint32_t primes[] = {2, 3, 5, 7};
  auto finite_atom = [&] {
    std::vector<std::uint64_t> orders;
    for (std::uint64_t i = 0, k = 1 + pick(2); i < k; ++i) orders.push_back(1 + pick(12));
    return GroupAtom::finite(std::move(orders));
  };
  auto random_atom = [&]() -> GroupAtom {
    switch (pick(4)) {
      case 0: return finite_atom();
      case 1: return GroupAtom::free(static_cast<std::uint32_t>(1 + pick(3)));
      case 2: return GroupAtom::prufer(primes[pick(4)]);
      default: return GroupAtom::countable_sum(finite_atom());
    }
  };
  std::vector<GroupSpec> out;
  for (std::size_t i = 0; i < count; ++i) {
    GroupSpec g;
    switch (i % 5) {
      case 0:  // a Prufer group, possibly padded with trivial summands
        g.atoms.push_back(GroupAtom::prufer(primes[pick(4)]));
        if (pick(2)) g.atoms.push_back(GroupAtom::finite({1}));
        if (pick(2)) g.atoms.push_back(GroupAtom::countable_sum(GroupAtom::finite({1})));
        break;
      case 1:  // finite
        for (std::uint64_t k = 0, n = 1 + pick(3); k < n; ++k) g.atoms.push_back(finite_atom());
        break;
      default:
        for (std::uint64_t k = 0, n = 1 + pick(3); k < n; ++k) g.atoms.push_back(random_atom());
    }
    out.push_back(std::move(g));
  }
  return out;
}

// -------------------------------------------------------------------- checks

namespace {

json labels_of(const FiniteRing& r, const Bitset& s) {
  json a = json::array();
  for (Elem x : s.members()) a.push_back(r.label(x));
  return a;
}

}  // namespace

json check_ring(const std::string& text, const CorpusConfig& cfg, std::vector<std::string>& failures,
                bool& expected_negative) {
  expected_negative = false;
  json rec;
  rec["spec"] = text;
  RingSpec spec;
  try {
    spec = parse_ring_spec(text);
  } catch (const ParseError& e) {
    failures.push_back(std::string("spec does not parse: ") + e.what());
    rec["error"] = e.what();
    return rec;
  }
  rec["spec"] = spec.to_string();
  if (!spec.is_finite()) {
    const EffectiveRing eff = *ring_build(spec).effective;
    const EffectiveReport rep = check_effective(eff);
    rec["order"] = "infinite";
    rec["balanced"] = rep.balanced;
    rec["witness"] = rep.witness;
    rec["depth_zero_all"] = rep.depth_zero_all;
    rec["hom_criterion"] = rep.hom_nonzero_any;
    if (rep.balanced || rep.depth_zero_all || rep.hom_nonzero_any)
      failures.push_back("effective ring does not show the all-false side");
    return rec;
  }
  std::optional<FiniteRing> built;
  try {
    built = build_finite(spec, {cfg.ring_cap, cfg.verify_axioms});
  } catch (const std::invalid_argument& e) {
    if (spec.kind == RingSpec::Kind::MonoidRing && !spec.monoid->is_commutative()) {
      expected_negative = true;
      rec["rejected"] = e.what();
      return rec;
    }
    failures.push_back(std::string("build failed: ") + e.what());
    rec["error"] = e.what();
    return rec;
  } catch (const CapExceeded& e) {
    failures.push_back(e.what());
    rec["error"] = e.what();
    return rec;
  }
  const FiniteRing& r = *built;
  const std::size_t n = r.order();
  rec["order"] = n;
  rec["axioms_verified"] = cfg.verify_axioms;

  const auto uz = units_and_zero_divisors(r);
  rec["units"] = uz.units.count();
  rec["zero_divisors"] = uz.zero_divisors.count();

  const auto ids = ideals(r, cfg.ring_cap);
  rec["ideals"] = ids.size();
  rec["maximal_ideals"] = std::count_if(ids.begin(), ids.end(), [](const Ideal& i) { return i.maximal; });

  const auto bal = is_balanced(r);
  rec["balanced"] = bal.balanced;
  if (!bal.balanced) failures.push_back("not balanced: " + r.label(*bal.witness) + " is a non-zero-divisor non-unit");

  const auto tfr = total_fraction_ring(r);
  rec["tfr_iso"] = tfr.is_iso;
  rec["tfr_order"] = tfr.ring.order();
  if (!tfr.is_iso) failures.push_back("canonical map R -> T(R) is not an isomorphism");
  const Cardinal tfr_card = card_fraction_ring(Cardinal::finite(n));
  if (tfr.ring.order() != n || !(tfr_card == Cardinal::finite(tfr.ring.order())))
    failures.push_back("|T(R)| differs from |R|");

  const auto ld = local_decomposition(r);
  json factors = json::array();
  bool depth = true;
  for (const FiniteRing& f : ld.factors) {
    factors.push_back(f.order());
    if (ld.all_local) depth = depth && depth_zero(f);
  }
  rec["local_factors"] = factors;
  rec["depth_zero_all"] = ld.all_local && depth;
  if (!ld.all_local || !ld.is_iso) failures.push_back("idempotent decomposition is not a product of local rings");
  if (!depth) failures.push_back("a local factor has positive depth");

  const bool hom = hom_criterion(r);
  rec["hom_criterion"] = hom;
  if (!hom) failures.push_back("Hom(R/M, R) = 0 for some maximal ideal M");

  if (n <= cfg.baer_cap) {
    const auto si = is_self_injective(r, cfg.baer_cap);
    rec["self_injective"] = si.self_injective;
    if (si.self_injective) {
      if (!bal.balanced) failures.push_back("self-injective but not balanced");
    } else {
      expected_negative = true;
      const auto& ce = *si.counterexample;
      json map = json::array();
      for (auto [x, y] : ce.map) map.push_back({r.label(x), r.label(y)});
      rec["baer_counterexample"] = {{"ideal", labels_of(r, ce.ideal)}, {"map", map}};
      if (!is_r_linear(r, ce.ideal, ce.map) || is_multiplication_map(r, ce.map))
        failures.push_back("Baer counterexample does not validate");
    }
  } else {
    rec["self_injective"] = nullptr;
  }

  if (spec.kind == RingSpec::Kind::MonoidRing) {
    const Natural base = spec.parts[0].order();
    const std::size_t m = spec.monoid->size();
    const Cardinal expected = card_monoid_ring(Cardinal::finite(base), Cardinal::finite(m));
    const bool ok = expected == Cardinal::finite(n) && Natural(n) == checked_pow(base, m);
    rec["monoid_ring_count"] = {{"base_order", base.str()}, {"monoid_order", m}, {"rule", expected.to_string()},
                                {"ok", ok}};
    if (!ok) failures.push_back("|R[M]| differs from |R|^|M|");
  }

  if (spec.kind == RingSpec::Kind::Product) {
    bool factors_balanced = true;
    for (const RingSpec& f : spec.parts) factors_balanced = factors_balanced && is_balanced(build_finite(f)).balanced;
    rec["factors_balanced"] = factors_balanced;
    if (factors_balanced && !bal.balanced) failures.push_back("product of balanced rings is not balanced");
  }

  if (spec.kind == RingSpec::Kind::Idealize && spec.parts[0].kind == RingSpec::Kind::Zmod && !spec.module.action &&
      n <= cfg.subring_cap) {
    const auto law = idealization_subring_law(spec, cfg.subring_cap);
    rec["subring_law"] = {{"unital_subrings", law.subrings},
                          {"module_subgroups", law.module_subgroups},
                          {"all_base_times_subgroup", law.all_product_form},
                          {"holds", law.holds()}};
    if (!law.holds()) failures.push_back("unital subrings are not exactly base x H");
  }
  return rec;
}

CorpusReport run_corpus(const CorpusConfig& cfg) {
  CorpusReport report;
  json rings = json::array(), groups = json::array(), chains = json::array(), specs = json::array();
  std::vector<std::string> failure_lines;

  // rings, in parallel with deterministic order
  const auto ring_specs = corpus_ring_specs(cfg);
  std::vector<json> records(ring_specs.size());
  std::vector<std::vector<std::string>> ring_failures(ring_specs.size());
  std::vector<char> negatives(ring_specs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ring_specs.size();) {
      bool neg = false;
      records[i] = check_ring(ring_specs[i], cfg, ring_failures[i], neg);
      negatives[i] = neg;
    }
  };
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, ring_specs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t balanced = 0, tfr_ok = 0, depth_ok = 0, hom_ok = 0, si_checked = 0, si_true = 0, monoid = 0,
              monoid_ok = 0, law = 0, law_ok = 0, rejected = 0, finite_rings = 0;
  for (std::size_t i = 0; i < ring_specs.size(); ++i) {
    json& rec = records[i];
    rec["failures"] = ring_failures[i];
    for (const auto& f : ring_failures[i]) failure_lines.push_back(rec["spec"].get<std::string>() + ": " + f);
    if (negatives[i]) ++report.expected_negatives;
    if (rec.contains("rejected")) ++rejected;
    if (rec.contains("tfr_iso")) {
      ++finite_rings;
      balanced += rec["balanced"].get<bool>();
      tfr_ok += rec["tfr_iso"].get<bool>() && rec["tfr_order"] == rec["order"];
      depth_ok += rec["depth_zero_all"].get<bool>();
      hom_ok += rec["hom_criterion"].get<bool>();
      if (!rec["self_injective"].is_null()) {
        ++si_checked;
        si_true += rec["self_injective"].get<bool>();
      }
    }
    if (rec.contains("monoid_ring_count")) {
      ++monoid;
      monoid_ok += rec["monoid_ring_count"]["ok"].get<bool>();
    }
    if (rec.contains("subring_law")) {
      ++law;
      law_ok += rec["subring_law"]["holds"].get<bool>();
    }
    rings.push_back(std::move(rec));
  }

  std::size_t groups_ok = 0;
  const auto group_lists = abelian_groups_up_to(cfg.group_max_order);
  for (const auto& factors : group_lists) {
    const FinAbGroup g(factors);
    const auto subs = subgroups(g, std::max<std::size_t>(128, g.order()));
    const bool bad = has_proper_same_card_subgroup(g, std::max<std::size_t>(128, g.order()));
    groups.push_back({{"factors", factors}, {"order", g.order()}, {"subgroups", subs.size()},
                      {"proper_same_card_subgroup", bad}});
    if (bad)
      failure_lines.push_back("finite group " + GroupAtom::finite(factors).to_string() +
                              " has a proper subgroup of the same order");
    else
      ++groups_ok;
  }

  std::size_t chains_ok = 0;
  for (std::uint32_t p : cfg.prufer_primes)
    for (std::uint32_t k = 0; k <= cfg.prufer_max_exponent; ++k) {
      const bool ok = prufer_truncation_check(p, k);
      chains.push_back({{"p", p}, {"n", k}, {"chain", ok}});
      if (ok)
        ++chains_ok;
      else
        failure_lines.push_back("Z/" + std::to_string(p) + "^" + std::to_string(k) + " subgroups do not form a chain");
    }

  const std::size_t chains_total = chains.size();
  std::size_t specs_ok = 0, witnesses = 0;
  for (const GroupSpec& g : sample_group_specs(cfg.group_spec_samples, cfg.seed)) {
    const GroupClass c = classify(g);
    json rec = {{"spec", g.to_string()}, {"class", to_string(c)}, {"cardinality", g.cardinality().to_string()}};
    bool ok = true;
    // cross-check: finite iff the cardinality is finite
    if ((c == GroupClass::Finite) != g.cardinality().is_finite()) ok = false;
    if (c == GroupClass::HasProperSameCardSubgroup) {
      ++witnesses;
      const SameCardWitness w = same_card_subgroup_witness(g);
      std::string why;
      const bool valid = validate_witness(w, &why);
      rec["witness"] = {{"subgroup", w.subgroup.to_string()}, {"outside", w.outside}, {"rule", w.rule},
                        {"valid", valid}};
      if (!valid) {
        ok = false;
        rec["witness"]["why"] = why;
      }
    }
    if (ok)
      ++specs_ok;
    else
      failure_lines.push_back("group spec " + g.to_string() + " failed classification checks");
    specs.push_back(std::move(rec));
  }

  report.failures = failure_lines.size();
  report.json = {{"schema_version", 1},
                 {"config", cfg.to_json()},
                 {"rings", std::move(rings)},
                 {"finite_groups", std::move(groups)},
                 {"prufer_chains", std::move(chains)},
                 {"group_specs", std::move(specs)},
                 {"failures", failure_lines},
                 {"summary",
                  {{"rings", ring_specs.size()},
                   {"finite_rings", finite_rings},
                   {"balanced", balanced},
                   {"tfr_iso", tfr_ok},
                   {"depth_zero", depth_ok},
                   {"hom_criterion", hom_ok},
                   {"baer_checked", si_checked},
                   {"self_injective", si_true},
                   {"monoid_rings", monoid},
                   {"subring_law", law},
                   {"finite_groups", group_lists.size()},
                   {"prufer_chains", chains_ok},
                   {"group_specs", cfg.group_spec_samples},
                   {"expected_negatives", report.expected_negatives},
                   {"failures", report.failures}}}};

  std::ostringstream os;
  auto row = [&](const std::string& name, const std::string& value) {
    os << "  " << name << std::string(name.size() < 32 ? 32 - name.size() : 1, ' ') << value << "\n";
  };
  auto frac = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
  os << "corpus summary\n";
  row("rings", std::to_string(ring_specs.size()) + " (" + std::to_string(rejected) + " rejected as expected)");
  row("balanced", frac(balanced, finite_rings));
  row("R -> T(R) iso, |T(R)| = |R|", frac(tfr_ok, finite_rings));
  row("local factors depth 0", frac(depth_ok, finite_rings));
  row("Hom(R/M, R) != 0", frac(hom_ok, finite_rings));
  row("self-injective (Baer)", frac(si_true, si_checked) + " within cap, others recorded as expected negatives");
  row("|R[M]| = |R|^|M|", frac(monoid_ok, monoid));
  row("subrings = base x H", frac(law_ok, law));
  row("finite groups: no proper", frac(groups_ok, group_lists.size()));
  row("Prufer truncation chains", frac(chains_ok, chains_total));
  row("group specs (" + std::to_string(witnesses) + " witnesses)", frac(specs_ok, cfg.group_spec_samples));
  row("failures", std::to_string(report.failures));
  for (const auto& f : failure_lines) os << "    " << f << "\n";
  report.summary = os.str();
  return report;
}

}  // namespace cardalg
