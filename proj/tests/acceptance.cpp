// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cardalg/abgroup.hpp"
#include "cardalg/bijection.hpp"
#include "cardalg/cardinal_ops.hpp"
#include "cardalg/cli.hpp"
#include "cardalg/corpus.hpp"
#include "cardalg/expr.hpp"
#include "cardalg/finring.hpp"
#include "cardalg/trace.hpp"
#include "oracles.hpp"

using namespace cardalg;

namespace {

// Collects the first few failure messages of a criterion.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream note;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool has_rule(const DerivationTrace& t, const std::string& id) {
  for (const TraceStep& s : t.steps)
    if (s.rule_id == id) return true;
  return false;
}

// Evaluates `text` in `mode` and expects the rendered result and a rule in the trace.
void expect_eval(Check& c, const std::string& text, Mode mode, const std::string& result, const std::string& rule) {
  const Evaluation ev = evaluate(text, mode);
  c.expect(ev.trace.result == result, text + " gave " + ev.trace.result + ", want " + result);
  c.expect(has_rule(ev.trace, rule), text + " has no " + rule + " step");
  std::string why;
  c.expect(replay(ev.trace, &why), text + " does not replay: " + why);
}

void rule_instances(Check& c) {
  expect_eval(c, "aleph(0) * aleph(0)", Mode::ZFC, "aleph(0)", "R-IDEM");
  expect_eval(c, "card_powser(2^aleph(0))", Mode::ZFC, "2^aleph(0)", "R-PS");
  for (const char* s : {"aleph(0)", "aleph(3)", "2^aleph(0)", "aleph(w)"})
    expect_eval(c, std::string("card_finsets(") + s + ")", Mode::ZFC, s, "L4-FIN");
  expect_eval(c, "card_dsum(3, 4)", Mode::ZFC, "81", "L3-DSUM");
  expect_eval(c, "card_dsum(1, aleph(0))", Mode::ZFC, "1", "L3-DSUM");
  expect_eval(c, "card_dsum(2, aleph(0))", Mode::ZFC, "aleph(0)", "L3-DSUM");
  expect_eval(c, "card_dsum(aleph(1), aleph(0))", Mode::ZFC, "aleph(1)", "L3-DSUM");
  expect_eval(c, "card_dsum(2^aleph(0), aleph(2))", Mode::ZFC, "max(2^aleph(0), aleph(2))", "L3-DSUM");
  expect_eval(c, "card_monoid_ring(2, 3)", Mode::ZFC, "8", "T1-MONOID");
  expect_eval(c, "card_monoid_ring(2, aleph(0))", Mode::ZFC, "aleph(0)", "T1-MONOID");
  expect_eval(c, "card_monoid_ring(aleph(0), aleph(1))", Mode::ZFC, "aleph(1)", "T1-MONOID");
  expect_eval(c, "card_poly(2, 1)", Mode::ZFC, "aleph(0)", "C-POLY");
  expect_eval(c, "card_poly(5, aleph(2))", Mode::ZFC, "aleph(2)", "C-POLY");
  expect_eval(c, "card_poly(2^aleph(0), aleph(1))", Mode::ZFC, "2^aleph(0)", "C-POLY");
  expect_eval(c, "card_poly(aleph(0), 1)", Mode::ZFC, "aleph(0)", "C-POLY");
  // the polynomial formula is aleph(0) x |R| x |S| in every tested case
  for (const char* r : {"2", "7", "aleph(0)", "aleph(1)", "2^aleph(0)"})
    for (const char* s : {"1", "3", "aleph(0)", "aleph(2)"}) {
      const std::string poly = std::string("card_poly(") + r + ", " + s + ")";
      const std::string prod = std::string("aleph(0) * ") + r + " * " + s;
      c.expect(evaluate(poly, Mode::ZFC).trace.result == evaluate(prod, Mode::ZFC).trace.result, poly);
    }
}

void aleph_omega(Check& c) {
  const Evaluation gch = evaluate("card_powser(aleph(w))", Mode::GCH);
  c.expect(gch.trace.result == "aleph(w+1)", "GCH gave " + gch.trace.result);
  const Evaluation zfc = evaluate("card_powser(aleph(w))", Mode::ZFC);
  c.expect(has_rule(zfc.trace, "R-KONIG"), "ZFC trace has no R-KONIG step");
  c.expect(zfc.trace.bounds.has_value(), "ZFC result carries no bounds");
  if (zfc.trace.bounds) {
    const Bounds& b = *zfc.trace.bounds;
    c.expect(b.lower.to_string() == "aleph(w)" && b.lower_strict, "lower bound is not (aleph(w)");
    c.expect(b.upper.to_string() == "2^aleph(w)" && !b.upper_strict, "upper bound is not 2^aleph(w)]");
  }
}

void bijections(Check& c) {
  for (unsigned m = 0; m <= 1000; ++m)
    for (unsigned n = 0; n <= 1000; ++n)
      if (cantor_unpair(cantor_pair(m, n)) != std::make_pair(Natural(m), Natural(n)))
        c.expect(false, "pair round trip at " + std::to_string(m) + ", " + std::to_string(n));
  for (unsigned k = 0; k <= 1000000; ++k) {
    const auto [m, n] = cantor_unpair(k);
    if (cantor_pair(m, n) != k) c.expect(false, "unpair round trip at " + std::to_string(k));
  }
  for (unsigned d = 0; d <= 100; ++d) {
    // the codes of m + n <= d are exactly 0 .. (d+1)(d+2)/2 - 1
    const unsigned size = (d + 1) * (d + 2) / 2;
    std::vector<bool> hit(size, false);
    for (unsigned m = 0; m <= d; ++m)
      for (unsigned n = 0; m + n <= d; ++n) {
        const Natural k = cantor_pair(m, n);
        if (k >= size) c.expect(false, "code out of prefix at d = " + std::to_string(d));
        else hit[k.convert_to<unsigned>()] = true;
      }
    c.expect(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), "prefix gap at d = " + std::to_string(d));
  }
  oracle::Rng rng(2024);
  for (int i = 0; i < 100000; ++i) {
    std::set<std::size_t> s;
    for (std::uint64_t k = rng.below(12); k > 0; --k) s.insert(rng.below(300));
    if (finset_decode(finset_encode(s)) != s) c.expect(false, "finset round trip");
    FinSupportSeq f;
    for (std::uint64_t k = rng.below(10); k > 0; --k) f.set(rng.below(60), rng.range(1, 100000));
    if (!(finsupp_decode(finsupp_encode(f)) == f)) c.expect(false, "finsupp round trip");
  }
}

CorpusReport& default_corpus() {
  static CorpusReport rep = run_corpus(CorpusConfig());
  return rep;
}

void finite_ring_suite(Check& c) {
  const CorpusReport& rep = default_corpus();
  std::size_t finite = 0, monoid = 0;
  for (const auto& r : rep.json["rings"]) {
    const std::string spec = r["spec"];
    c.expect(r["failures"].empty(), spec + ": " + r["failures"].dump());
    if (r.contains("rejected")) continue;
    ++finite;
    c.expect(r["balanced"] == true, spec + " not balanced");
    c.expect(r["tfr_iso"] == true, spec + ": R -> T(R) not an isomorphism");
    c.expect(r["tfr_order"] == r["order"], spec + ": |T(R)| != |R|");
    c.expect(r["depth_zero_all"] == true, spec + ": a local factor has positive depth");
    if (r.contains("monoid_ring_count")) {
      ++monoid;
      const auto& m = r["monoid_ring_count"];
      Natural expected = 1;
      const Natural base = parse_natural(m["base_order"].get<std::string>());
      for (int k = 0; k < m["monoid_order"].get<int>(); ++k) expected *= base;
      c.expect(Natural(r["order"].get<std::uint64_t>()) == expected, spec + ": |R[M]| != |R|^|M|");
    }
  }
  c.expect(finite >= 150, "only " + std::to_string(finite) + " corpus rings");
  c.expect(monoid > 0, "no monoid rings in the corpus");
  c.expect(rep.failures == 0, std::to_string(rep.failures) + " corpus failures");
  c.note << finite << " rings, " << monoid << " monoid rings\n";
}

void self_injectivity(Check& c) {
  for (unsigned n = 2; n <= 30; ++n)
    c.expect(is_self_injective(build_finite(RingSpec::zmod(n))).self_injective, "Z/" + std::to_string(n));
  const FiniteRing r = build_finite(parse_ring_spec("idealize(Z/2, [2,2])"));
  const SelfInjectiveResult si = is_self_injective(r);
  c.expect(!si.self_injective && si.counterexample.has_value(), "idealize(Z/2, [2,2]) reported self-injective");
  if (si.counterexample) {
    c.expect(is_ideal(r, si.counterexample->ideal), "counterexample domain is not an ideal");
    c.expect(is_r_linear(r, si.counterexample->ideal, si.counterexample->map), "counterexample is not R-linear");
    c.expect(!is_multiplication_map(r, si.counterexample->map), "counterexample extends to R");
    c.expect(oracle::brute_self_injective(r) == false, "subset oracle disagrees");
  }
  std::size_t positives = 0, negatives = 0;
  for (const auto& rec : default_corpus().json["rings"]) {
    if (!rec.contains("self_injective") || rec["self_injective"].is_null()) continue;
    if (rec["self_injective"] == true) {
      ++positives;
      c.expect(rec["balanced"] == true, rec["spec"].get<std::string>() + " self-injective but not balanced");
    } else {
      ++negatives;
    }
  }
  c.expect(positives > 0 && negatives > 0, "corpus lacks both self-injective and non-self-injective rings");
  c.note << "corpus: " << positives << " self-injective, " << negatives << " not\n";
}

void subring_law(Check& c) {
  std::size_t checked = 0;
  for (const std::string& spec : corpus_ring_specs(CorpusConfig())) {
    const RingSpec s = parse_ring_spec(spec);
    if (s.kind != RingSpec::Kind::Idealize || s.order() > 32) continue;
    const SubringLawReport law = idealization_subring_law(s);
    c.expect(law.holds(), spec + ": " + std::to_string(law.subrings) + " subrings, " +
                              std::to_string(law.module_subgroups) + " subgroups");
    // the module subgroup count also comes from the subset oracle
    const FinAbGroup m(std::vector<std::uint64_t>(s.module.orders.begin(), s.module.orders.end()));
    c.expect(law.module_subgroups == oracle::brute_subgroup_count(m), spec + ": subgroup count");
    ++checked;
  }
  c.expect(checked > 0, "no idealizations of order <= 32");
  c.note << checked << " idealizations\n";
}

void group_suite(Check& c) {
  for (const auto& factors : abelian_groups_up_to(64))
    c.expect(!has_proper_same_card_subgroup(FinAbGroup(factors)), "a finite group has a same-size proper subgroup");
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint32_t n = 0; n <= 4; ++n)
      c.expect(prufer_truncation_check(p, n), "chain " + std::to_string(p) + "^" + std::to_string(n));
  std::size_t witnesses = 0;
  for (const GroupSpec& spec : sample_group_specs(50, CorpusConfig().seed)) {
    std::size_t prufer = 0, other = 0;
    for (const GroupAtom& a : spec.atoms)
      if (!a.is_trivial()) (a.kind == GroupAtom::Kind::Prufer ? prufer : other)++;
    const bool finite = spec.cardinality().is_finite();
    const GroupClass expected = finite                             ? GroupClass::Finite
                                : (prufer == 1 && other == 0) ? GroupClass::Prufer
                                                                : GroupClass::HasProperSameCardSubgroup;
    c.expect(classify(spec) == expected, spec.to_string() + " misclassified");
    if (expected != GroupClass::HasProperSameCardSubgroup) continue;
    std::string why;
    c.expect(validate_witness(same_card_subgroup_witness(spec), &why), spec.to_string() + ": " + why);
    ++witnesses;
  }
  c.note << witnesses << " witnesses validated\n";
}

void integers(Check& c) {
  std::ostringstream out, err;
  const int code = run_cli({"ring", "check", "ZZ", "--balanced", "--depth"}, out, err);
  const std::string text = out.str();
  c.expect(code == 0, "exit code " + std::to_string(code));
  c.expect(text.find("balanced: false (witness 2") != std::string::npos, "no witness 2 in: " + text);
  c.expect(text.find("depth_zero_all: false") != std::string::npos, "depth line missing in: " + text);
  c.expect(text.find("hom_criterion: false") != std::string::npos, "Hom line missing in: " + text);
}

void mode_soundness(Check& c) {
  oracle::Rng rng(99);
  std::size_t pairs = 0, definite = 0;
  while (pairs < 10000) {
    const oracle::Node a = oracle::random_node(rng, 2), b = oracle::random_node(rng, 2);
    if (!oracle::domain_ok(a) || !oracle::domain_ok(b)) continue;
    ++pairs;
    const Cardinal za = evaluate(oracle::render(a), Mode::ZFC).value;
    const Cardinal zb = evaluate(oracle::render(b), Mode::ZFC).value;
    const Cardinal ga = evaluate(oracle::render(a), Mode::GCH).value;
    const Cardinal gb = evaluate(oracle::render(b), Mode::GCH).value;
    const CompareResult z = card_compare(za, zb, Mode::ZFC);
    const CompareResult g = card_compare(ga, gb, Mode::GCH);
    c.expect(g != CompareResult::Unknown, "GCH undecided on " + oracle::render(a) + " ? " + oracle::render(b));
    if (z == CompareResult::Unknown) continue;
    ++definite;
    c.expect(z == g, oracle::render(a) + " ? " + oracle::render(b) + ": ZFC " + to_string(z) + ", GCH " + to_string(g));
  }
  c.note << pairs << " pairs, " << definite << " decided in ZFC\n";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"1 rule instances", rule_instances},       {"2 aleph(w) power series", aleph_omega},
      {"3 bijections", bijections},               {"4 finite-ring corpus", finite_ring_suite},
      {"5 self-injectivity", self_injectivity},   {"6 idealization subrings", subring_law},
      {"7 groups", group_suite},                  {"8 integers", integers},
      {"9 mode soundness", mode_soundness},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.failures.empty() ? "PASS " : "FAIL ") << std::left << std::setw(28) << name << std::fixed
              << std::setprecision(2) << secs << " s\n";
    if (!c.note.str().empty()) std::cout << "    " << c.note.str();
    for (std::size_t i = 0; i < std::min<std::size_t>(c.failures.size(), 5); ++i)
      std::cout << "    " << c.failures[i] << "\n";
    if (!c.failures.empty()) ++failed;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all passed")
            << "\n";
  return failed ? 1 : 0;
}
