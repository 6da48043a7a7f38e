#include "cardalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cardalg/abgroup.hpp"
#include "cardalg/bijection.hpp"
#include "cardalg/cardinal_ops.hpp"
#include "cardalg/corpus.hpp"
#include "cardalg/expr.hpp"
#include "cardalg/finring.hpp"
#include "cardalg/parse_util.hpp"
#include "cardalg/trace.hpp"

namespace cardalg {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

Mode parse_mode(const std::string& s) { return s == "gch" ? Mode::GCH : Mode::ZFC; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// ---------------------------------------------------------------- eval, cmp

int cmd_eval(const std::string& text, Mode mode, const std::string& trace_format, std::ostream& out,
             std::ostream& err) {
  const Evaluation ev = evaluate(text, mode);
  std::string why;
  if (!replay(ev.trace, &why)) {
    err << "error: trace does not replay: " << why << "\n";
    return kCheckFailed;
  }
  if (trace_format == "json")
    out << to_json(ev.trace).dump(2) << "\n";
  else if (trace_format == "text")
    out << to_text(ev.trace);
  else
    out << describe_result(ev.trace) << "\n";
  return kOk;
}

int cmd_cmp(const std::string& a, const std::string& b, Mode mode, std::ostream& out) {
  const Evaluation ea = evaluate(a, mode), eb = evaluate(b, mode);
  const CompareResult c = card_compare(ea.value, eb.value, mode);
  out << to_string(c) << "\n";
  if (c == CompareResult::Unknown) {
    out << "  left:  " << describe_result(ea.trace) << "\n";
    out << "  right: " << describe_result(eb.trace) << "\n";
  }
  return kOk;
}

// --------------------------------------------------------------------- ring

struct RingChecks {
  bool balanced = false, tfr = false, depth = false, selfinj = false, subrings = false, all = false;
  bool json = false;
  std::size_t cap = 4096;
  bool verify = false;
};

int cmd_ring_effective(const RingSpec& spec, const RingChecks& want, std::ostream& out) {
  const EffectiveRing eff = *ring_build(spec).effective;
  const EffectiveReport rep = check_effective(eff);
  if (want.json) {
    nlohmann::json j{{"spec", spec.to_string()}, {"order", "infinite"}};
    if (want.balanced) j["balanced"] = rep.balanced, j["witness"] = rep.witness;
    if (want.depth) {
      j["depth_zero_all"] = rep.depth_zero_all;
      j["hom_criterion"] = rep.hom_nonzero_any;
      j["sampled_primes"] = rep.primes;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "ring: " << spec.to_string() << "\n";
  out << "order: infinite\n";
  if (want.balanced)
    out << "balanced: " << yes_no(rep.balanced) << " (witness " << rep.witness
        << ": not a zero-divisor, not a unit)\n";
  if (want.depth) {
    out << "depth_zero_all: " << yes_no(rep.depth_zero_all) << " (ann(p) = 0 at sampled primes "
        << join(rep.primes, ", ") << ")\n";
    out << "hom_criterion: " << yes_no(rep.hom_nonzero_any) << " (Hom(R/(p), R) = 0 at the same primes)\n";
  }
  for (const char* skipped : {"tfr", "selfinj", "subrings"}) {
    const bool asked = std::string(skipped) == "tfr" ? want.tfr : std::string(skipped) == "selfinj" ? want.selfinj
                                                                                                     : want.subrings;
    if (asked && !want.all) out << skipped << ": not available for infinite rings\n";
  }
  return kOk;
}

int cmd_ring(const std::string& text, RingChecks want, std::ostream& out, std::ostream& err) {
  const RingSpec spec = parse_ring_spec(text);
  if (want.all || !(want.balanced || want.tfr || want.depth || want.selfinj || want.subrings))
    want.balanced = want.tfr = want.depth = want.selfinj = want.subrings = true;
  if (!spec.is_finite()) return cmd_ring_effective(spec, want, out);

  const FiniteRing r = build_finite(spec, {want.cap, want.verify});
  bool failed = false;
  nlohmann::json j{{"spec", spec.to_string()}, {"order", r.order()}};
  std::ostringstream text_out;
  text_out << "ring: " << spec.to_string() << "\n" << "order: " << r.order() << "\n";

  BalancedResult bal{true, std::nullopt};
  if (want.balanced || want.selfinj) bal = is_balanced(r);
  if (want.balanced) {
    j["balanced"] = bal.balanced;
    text_out << "balanced: " << yes_no(bal.balanced);
    if (bal.witness) {
      j["witness"] = r.label(*bal.witness);
      text_out << " (witness " << r.label(*bal.witness) << ")";
    }
    text_out << "\n";
    failed = failed || !bal.balanced;
  }
  if (want.tfr) {
    const FractionRing t = total_fraction_ring(r);
    j["tfr_iso"] = t.is_iso;
    j["tfr_order"] = t.ring.order();
    text_out << "tfr_iso: " << yes_no(t.is_iso) << " (|T(R)| = " << t.ring.order() << ")\n";
    failed = failed || !t.is_iso || t.ring.order() != r.order();
  }
  if (want.depth) {
    const LocalDecomposition ld = local_decomposition(r);
    std::vector<std::size_t> orders;
    bool depth = ld.all_local && ld.is_iso;
    for (const FiniteRing& f : ld.factors) {
      orders.push_back(f.order());
      if (ld.all_local) depth = depth && depth_zero(f);
    }
    const bool hom = hom_criterion(r);
    j["local_factors"] = orders;
    j["depth_zero_all"] = depth;
    j["hom_criterion"] = hom;
    std::vector<std::string> os;
    for (auto o : orders) os.push_back(std::to_string(o));
    text_out << "local_factors: [" << join(os, ", ") << "]\n";
    text_out << "depth_zero_all: " << yes_no(depth) << "\n";
    text_out << "hom_criterion: " << yes_no(hom) << "\n";
    failed = failed || !depth || !hom;
  }
  if (want.selfinj) {
    if (r.order() > 64) {
      j["self_injective"] = nullptr;
      text_out << "self_injective: skipped (order above the Baer cap 64)\n";
    } else {
      const SelfInjectiveResult si = is_self_injective(r, 64);
      j["self_injective"] = si.self_injective;
      text_out << "self_injective: " << yes_no(si.self_injective) << "\n";
      if (si.counterexample) {
        std::vector<std::string> ideal, map;
        nlohmann::json jm = nlohmann::json::array();
        for (Elem x : si.counterexample->ideal.members()) ideal.push_back(r.label(x));
        for (auto [x, y] : si.counterexample->map) {
          map.push_back(r.label(x) + " -> " + r.label(y));
          jm.push_back({r.label(x), r.label(y)});
        }
        j["baer_counterexample"] = {{"ideal", ideal}, {"map", jm}};
        text_out << "  ideal I = {" << join(ideal, ", ") << "}\n";
        text_out << "  R-linear f: I -> R that is not multiplication by any element:\n";
        for (const auto& m : map) text_out << "    " << m << "\n";
      }
      failed = failed || (si.self_injective && !bal.balanced);
    }
  }
  if (want.subrings && spec.kind == RingSpec::Kind::Idealize && spec.parts[0].kind == RingSpec::Kind::Zmod &&
      !spec.module.action && r.order() <= 32) {
    const SubringLawReport law = idealization_subring_law(spec, 32);
    j["subring_law"] = {{"unital_subrings", law.subrings},
                        {"module_subgroups", law.module_subgroups},
                        {"holds", law.holds()}};
    text_out << "subring_law: " << yes_no(law.holds()) << " (" << law.subrings << " unital subrings, "
             << law.module_subgroups << " subgroups of M)\n";
    failed = failed || !law.holds();
  }
  if (want.json)
    out << j.dump(2) << "\n";
  else
    out << text_out.str();
  if (failed) err << "check failed for " << spec.to_string() << "\n";
  return failed ? kCheckFailed : kOk;
}

// -------------------------------------------------------------------- group

int cmd_group(const std::string& what, const std::string& text, std::ostream& out, std::ostream& err) {
  const GroupSpec g = parse_group_spec(text);
  if (what == "classify") {
    out << to_string(classify(g)) << "\n";
    out << "cardinality: " << g.cardinality().to_string() << "\n";
    return kOk;
  }
  if (what == "witness") {
    const GroupClass c = classify(g);
    if (c != GroupClass::HasProperSameCardSubgroup) {
      out << to_string(c) << ": every proper subgroup is smaller\n";
      return kOk;
    }
    const SameCardWitness w = same_card_subgroup_witness(g);
    std::string why;
    const bool valid = validate_witness(w, &why);
    out << "group:    " << g.to_string() << "\n";
    out << "subgroup: " << w.subgroup.to_string() << "\n";
    out << "outside:  " << w.outside << " (summand " << w.outside_atom + 1 << ")\n";
    out << "rule:     " << w.rule << "\n";
    out << "cardinality: " << g.cardinality().to_string() << " = " << w.subgroup.cardinality().to_string() << "\n";
    out << "valid:    " << yes_no(valid) << "\n";
    if (!valid) err << "witness does not validate: " << why << "\n";
    return valid ? kOk : kCheckFailed;
  }
  // subgroups: finite specs only
  std::vector<std::uint64_t> orders;
  for (const GroupAtom& a : g.atoms) {
    if (a.kind != GroupAtom::Kind::FiniteAb)
      throw std::invalid_argument("group subgroups needs a finite spec such as fin(2,4)");
    orders.insert(orders.end(), a.orders.begin(), a.orders.end());
  }
  const FinAbGroup fg(orders);
  const auto subs = subgroups(fg, std::max<std::size_t>(128, fg.order()));
  out << subs.size() << " subgroups of " << g.to_string() << " (order " << fg.order() << ")\n";
  for (const Bitset& s : subs) {
    std::vector<std::string> labels;
    for (auto x : s.members()) labels.push_back(fg.label(x));
    out << "  order " << s.count() << ": {" << join(labels, ", ") << "}\n";
  }
  out << "proper subgroup of full order: " << yes_no(has_proper_same_card_subgroup(fg, subs.size() + fg.order()))
      << "\n";
  return kOk;
}

// ---------------------------------------------------------------------- bij

std::set<std::size_t> parse_index_set(const std::string& s) {
  std::set<std::size_t> out;
  if (trim(s).empty()) return out;
  for (const std::string& part : split(s, ',')) out.insert(std::stoul(parse_natural(trim(part)).str()));
  return out;
}

FinSupportSeq parse_finsupp(const std::string& s) {
  FinSupportSeq f;
  if (trim(s).empty()) return f;
  for (const std::string& part : split(s, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected index:value in '" + part + "'");
    f.set(std::stoul(parse_natural(trim(part.substr(0, colon))).str()), parse_natural(trim(part.substr(colon + 1))));
  }
  return f;
}

std::string render_set(const std::set<std::size_t>& s) {
  std::vector<std::string> v;
  for (auto i : s) v.push_back(std::to_string(i));
  return join(v, ",");
}

std::string render_finsupp(const FinSupportSeq& f) {
  std::vector<std::string> v;
  for (const auto& [i, x] : f.support()) v.push_back(std::to_string(i) + ":" + x.str());
  return join(v, ",");
}

int cmd_roundtrip(std::uint64_t limit, std::ostream& out, std::ostream& err) {
  std::size_t failures = 0;
  for (std::uint64_t m = 0; m <= limit; ++m)
    for (std::uint64_t n = 0; n <= limit; ++n)
      if (cantor_unpair(cantor_pair(m, n)) != std::pair<Natural, Natural>(m, n)) ++failures;
  const std::uint64_t k_max = limit * limit;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const auto [m, n] = cantor_unpair(k);
    if (cantor_pair(m, n) != k) ++failures;
  }
  for (std::uint64_t k = 0; k <= limit; ++k) {
    if (finset_encode(finset_decode(k)) != k) ++failures;
    if (finsupp_encode(finsupp_decode(k)) != k) ++failures;
  }
  out << "pairs m, n <= " << limit << "; codes k <= " << k_max << "; finset/finsupp codes <= " << limit << "\n";
  out << "failures: " << failures << "\n";
  if (failures) err << "round trip failed\n";
  return failures ? kCheckFailed : kOk;
}

// ------------------------------------------------------------------- corpus

int cmd_corpus(const std::string& config_path, const std::string& out_path, std::size_t threads, std::ostream& out,
               std::ostream& err) {
  CorpusConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      err << "error: cannot read config " << config_path << "\n";
      return kUsage;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      err << "error: config is not valid JSON: " << e.what() << "\n";
      return kUsage;
    }
    cfg = CorpusConfig::from_json(j);
  }
  if (threads) cfg.threads = threads;
  const CorpusReport rep = run_corpus(cfg);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write " << out_path << "\n";
      return kUsage;
    }
    f << rep.json.dump(2) << "\n";
  }
  out << rep.summary;
  return rep.failures ? kCheckFailed : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic cardinal arithmetic and finite algebra checks", "cardalg"};
  app.require_subcommand(1);
  std::function<int()> action;

  // eval
  std::string expr_text, mode = "zfc", trace_format = "none";
  auto* eval = app.add_subcommand("eval", "Evaluate a cardinal expression to normal form");
  eval->add_option("expr", expr_text, "Expression, e.g. \"card_powser(aleph(w))\"")->required();
  eval->add_option("--mode", mode, "Set-theoretic mode")->check(CLI::IsMember({"zfc", "gch"}));
  eval->add_option("--trace", trace_format, "Print the derivation")->check(CLI::IsMember({"none", "text", "json"}));
  eval->callback([&] { action = [&] { return cmd_eval(expr_text, parse_mode(mode), trace_format, out, err); }; });

  // cmp
  std::string lhs, rhs;
  auto* cmp = app.add_subcommand("cmp", "Compare two cardinal expressions");
  cmp->add_option("lhs", lhs)->required();
  cmp->add_option("rhs", rhs)->required();
  cmp->add_option("--mode", mode)->check(CLI::IsMember({"zfc", "gch"}));
  cmp->callback([&] { action = [&] { return cmd_cmp(lhs, rhs, parse_mode(mode), out); }; });

  // ring check
  std::string ring_text;
  RingChecks checks;
  auto* ring = app.add_subcommand("ring", "Finite and effective ring checks");
  ring->require_subcommand(1);
  auto* ring_check = ring->add_subcommand("check", "Check a ring spec");
  ring_check->add_option("spec", ring_text, "Ring spec, e.g. \"idealize(Z/2, [2,2])\"")->required();
  ring_check->add_flag("--all", checks.all, "Run every check (default)");
  ring_check->add_flag("--balanced", checks.balanced, "Non-zero-divisors are units");
  ring_check->add_flag("--tfr", checks.tfr, "Total fraction ring");
  ring_check->add_flag("--depth", checks.depth, "Local factors have depth zero; Hom(R/M, R) != 0");
  ring_check->add_flag("--selfinj", checks.selfinj, "Baer criterion");
  ring_check->add_flag("--subrings", checks.subrings, "Unital subrings of an idealization");
  ring_check->add_flag("--json", checks.json, "Print a JSON record");
  ring_check->add_flag("--verify", checks.verify, "Verify the ring axioms on the tables");
  ring_check->add_option("--cap", checks.cap, "Maximum ring order")->check(CLI::Range(2, 4096));
  ring_check->callback([&] { action = [&] { return cmd_ring(ring_text, checks, out, err); }; });

  // group
  std::string group_text;
  auto* group = app.add_subcommand("group", "Countable abelian group specs");
  group->require_subcommand(1);
  for (const char* what : {"classify", "witness", "subgroups"}) {
    auto* sub = group->add_subcommand(what, std::string(what) + " a group spec");
    sub->add_option("spec", group_text, "Group spec, e.g. \"free(1) + prufer(2)\"")->required();
    sub->callback([&, what] { action = [&, what] { return cmd_group(what, group_text, out, err); }; });
  }

  // bij
  std::string a1, a2;
  std::uint64_t limit = 100;
  auto* bij = app.add_subcommand("bij", "Explicit countable bijections");
  bij->require_subcommand(1);
  auto* pair = bij->add_subcommand("pair", "Cantor pairing of m and n");
  pair->add_option("m", a1)->required();
  pair->add_option("n", a2)->required();
  pair->callback([&] {
    action = [&] {
      out << cantor_pair(parse_natural(a1), parse_natural(a2)).str() << "\n";
      return kOk;
    };
  });
  auto* unpair = bij->add_subcommand("unpair", "Inverse of the Cantor pairing");
  unpair->add_option("k", a1)->required();
  unpair->callback([&] {
    action = [&] {
      const auto [m, n] = cantor_unpair(parse_natural(a1));
      out << m.str() << " " << n.str() << "\n";
      return kOk;
    };
  });
  auto* fs_enc = bij->add_subcommand("finset-encode", "Code of a finite set of naturals, e.g. 0,2,3");
  fs_enc->add_option("set", a1)->required();
  fs_enc->callback([&] {
    action = [&] {
      out << finset_encode(parse_index_set(a1)).str() << "\n";
      return kOk;
    };
  });
  auto* fs_dec = bij->add_subcommand("finset-decode", "Finite set with code k");
  fs_dec->add_option("k", a1)->required();
  fs_dec->callback([&] {
    action = [&] {
      out << "{" << render_set(finset_decode(parse_natural(a1))) << "}\n";
      return kOk;
    };
  });
  auto* fp_enc = bij->add_subcommand("finsupp-encode", "Code of a finitely supported sequence, e.g. 0:3,5:1");
  fp_enc->add_option("seq", a1)->required();
  fp_enc->callback([&] {
    action = [&] {
      out << finsupp_encode(parse_finsupp(a1)).str() << "\n";
      return kOk;
    };
  });
  auto* fp_dec = bij->add_subcommand("finsupp-decode", "Finitely supported sequence with code k");
  fp_dec->add_option("k", a1)->required();
  fp_dec->callback([&] {
    action = [&] {
      out << "{" << render_finsupp(finsupp_decode(parse_natural(a1))) << "}\n";
      return kOk;
    };
  });
  auto* rt = bij->add_subcommand("roundtrip", "Exhaustive round trips up to a limit");
  rt->add_option("--limit", limit, "Largest m, n")->check(CLI::Range(0, 100000));
  rt->callback([&] { action = [&] { return cmd_roundtrip(limit, out, err); }; });

  // corpus run
  std::string config_path, out_path;
  std::size_t threads = 0;
  auto* corpus = app.add_subcommand("corpus", "Generated corpus of rings and groups");
  corpus->require_subcommand(1);
  auto* run = corpus->add_subcommand("run", "Run every check on the corpus");
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--out", out_path, "Write the JSON report here");
  run->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  run->callback([&] { action = [&] { return cmd_corpus(config_path, out_path, threads, out, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const EvalError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace cardalg
