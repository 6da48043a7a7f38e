#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "cardalg/abgroup.hpp"
#include "cardalg/finring.hpp"

namespace cardalg {

namespace {

Elem size_of(const FiniteRing& r) { return static_cast<Elem>(r.order()); }

Bitset principal(const FiniteRing& r, Elem a) {
  Bitset s(r.order());
  for (Elem x = 0; x < size_of(r); ++x) s.set(r.mul(x, a));
  return s;
}

Bitset ideal_sum(const FiniteRing& r, const Bitset& a, const Bitset& b) {
  Bitset s(r.order());
  const auto bs = b.members();
  for (Elem x : a.members())
    for (Elem y : bs) s.set(r.add(x, y));
  return s;
}

// Non-units of a finite ring.
Bitset non_units(const FiniteRing& r) {
  Bitset s(r.order());
  const Bitset u = units_and_zero_divisors(r).units;
  for (Elem a = 0; a < size_of(r); ++a)
    if (!u.test(a)) s.set(a);
  return s;
}

bool closed_under_addition(const FiniteRing& r, const Bitset& s) {
  const auto m = s.members();
  for (Elem x : m)
    for (Elem y : m)
      if (!s.test(r.add(x, y))) return false;
  return true;
}

// The ring e R with identity e, labelled by the parent's labels.
FiniteRing corner_ring(const FiniteRing& r, Elem e) {
  std::vector<Elem> elems;
  std::map<Elem, Elem> pos;
  for (Elem x = 0; x < size_of(r); ++x) pos[r.mul(e, x)] = 0;
  for (auto& [y, i] : pos) {
    i = static_cast<Elem>(elems.size());
    elems.push_back(y);
  }
  const std::size_t n = elems.size();
  std::vector<std::string> labels;
  for (Elem y : elems) labels.push_back(r.label(y));
  std::vector<std::uint16_t> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = static_cast<std::uint16_t>(pos.at(r.add(elems[i], elems[j])));
      mul[i * n + j] = static_cast<std::uint16_t>(pos.at(r.mul(elems[i], elems[j])));
    }
  return FiniteRing(r.name() + " * " + r.label(e), std::move(labels), std::move(add), std::move(mul),
                    pos.at(r.zero()), pos.at(e), false);
}

}  // namespace

UnitsAndZeroDivisors units_and_zero_divisors(const FiniteRing& r) {
  const Elem n = size_of(r);
  UnitsAndZeroDivisors out{Bitset(n), Bitset(n)};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem p = r.mul(a, b);
      if (p == r.one()) out.units.set(a);
      if (p == r.zero() && b != r.zero()) out.zero_divisors.set(a);
    }
  return out;
}

bool is_ideal(const FiniteRing& r, const Bitset& s) {
  if (!s.test(r.zero())) return false;
  const auto m = s.members();
  for (Elem x : m) {
    for (Elem y : m)
      if (!s.test(r.add(x, y))) return false;
    for (Elem a = 0; a < size_of(r); ++a)
      if (!s.test(r.mul(a, x))) return false;
  }
  return true;
}

Bitset ideal_generated(const FiniteRing& r, const std::vector<Elem>& gens) {
  Bitset s(r.order());
  s.set(r.zero());
  for (Elem g : gens) s = ideal_sum(r, s, principal(r, g));
  return s;
}

std::vector<Ideal> ideals(const FiniteRing& r, std::size_t cap) {
  if (r.order() > cap) throw CapExceeded(r.name() + ": order exceeds the ideal enumeration cap");
  // Every ideal of a finite commutative ring is a finite sum of principal ideals.
  std::set<Bitset> seen;
  std::vector<Bitset> principals;
  for (Elem a = 0; a < size_of(r); ++a) {
    Bitset p = principal(r, a);
    if (seen.insert(p).second) principals.push_back(p);
  }
  std::vector<Bitset> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const Bitset& i : frontier)
      for (const Bitset& p : principals) {
        if (p.is_subset_of(i)) continue;
        Bitset s = ideal_sum(r, i, p);
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  std::vector<Ideal> out;
  for (const Bitset& s : seen) out.push_back(Ideal{s, false});
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.members < b.members;
  });
  const std::size_t n = r.order();
  for (Ideal& i : out) {
    if (i.size() == n) continue;
    i.maximal = std::none_of(out.begin(), out.end(), [&](const Ideal& j) {
      return j.size() != n && j.size() > i.size() && i.members.is_subset_of(j.members);
    });
  }
  return out;
}

BalancedResult is_balanced(const FiniteRing& r) {
  const auto uz = units_and_zero_divisors(r);
  for (Elem a = 0; a < size_of(r); ++a)
    if (!uz.units.test(a) && !uz.zero_divisors.test(a)) return {false, a};
  return {true, std::nullopt};
}

FractionRing total_fraction_ring(const FiniteRing& r) {
  const Elem n = size_of(r);
  const Bitset zd = units_and_zero_divisors(r).zero_divisors;
  std::vector<Elem> denoms;
  for (Elem s = 0; s < n; ++s)
    if (!zd.test(s)) denoms.push_back(s);
  // With q_s the product of the other denominators, a/s = b/t iff
  // a q_s = b q_t, since at = bs and multiplying by a non-zero-divisor is injective.
  std::map<Elem, Elem> q;
  for (Elem s : denoms) {
    Elem p = r.one();
    for (Elem t : denoms)
      if (t != s) p = r.mul(p, t);
    q[s] = p;
  }
  auto key = [&](Elem a, Elem s) { return r.mul(a, q.at(s)); };

  std::map<Elem, Elem> cls;  // key -> class
  std::vector<std::pair<Elem, Elem>> rep;
  std::vector<Elem> order{r.one()};
  for (Elem s : denoms)
    if (s != r.one()) order.push_back(s);
  for (Elem s : order)
    for (Elem a = 0; a < n; ++a) {
      const Elem k = key(a, s);
      if (!cls.count(k)) {
        cls[k] = static_cast<Elem>(rep.size());
        rep.emplace_back(a, s);
      }
    }
  const std::size_t m = rep.size();
  std::vector<std::string> labels;
  for (auto [a, s] : rep) labels.push_back(r.label(a) + "/" + r.label(s));
  std::vector<std::uint16_t> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto [a, s] = rep[i];
      const auto [b, t] = rep[j];
      const Elem st = r.mul(s, t);
      add[i * m + j] = static_cast<std::uint16_t>(cls.at(key(r.add(r.mul(a, t), r.mul(b, s)), st)));
      mul[i * m + j] = static_cast<std::uint16_t>(cls.at(key(r.mul(a, b), st)));
    }
  FiniteRing t("T(" + r.name() + ")", std::move(labels), std::move(add), std::move(mul),
               cls.at(key(r.zero(), r.one())), cls.at(key(r.one(), r.one())), false);
  std::vector<Elem> map(n);
  for (Elem a = 0; a < n; ++a) map[a] = cls.at(key(a, r.one()));
  bool iso = m == n;
  std::vector<bool> hit(m, false);
  for (Elem a = 0; a < n && iso; ++a) {
    if (hit[map[a]]) iso = false;
    hit[map[a]] = true;
    for (Elem b = 0; b < n && iso; ++b)
      iso = map[r.add(a, b)] == t.add(map[a], map[b]) && map[r.mul(a, b)] == t.mul(map[a], map[b]);
  }
  return FractionRing{std::move(t), std::move(map), iso};
}

bool is_local(const FiniteRing& r) { return closed_under_addition(r, non_units(r)); }

Bitset maximal_ideal_of_local(const FiniteRing& r) {
  Bitset m = non_units(r);
  if (!closed_under_addition(r, m)) throw std::invalid_argument(r.name() + " is not local");
  return m;
}

LocalDecomposition local_decomposition(const FiniteRing& r) {
  const Elem n = size_of(r);
  std::vector<Elem> idem;
  for (Elem e = 0; e < n; ++e)
    if (e != r.zero() && r.mul(e, e) == e) idem.push_back(e);
  // primitive: no nonzero idempotent f != e with f e = f
  std::vector<Elem> prim;
  for (Elem e : idem) {
    const bool primitive = std::none_of(idem.begin(), idem.end(), [&](Elem f) { return f != e && r.mul(f, e) == f; });
    if (primitive) prim.push_back(e);
  }
  LocalDecomposition out{prim, {}, true, true};
  for (Elem e : prim) {
    out.factors.push_back(corner_ring(r, e));
    out.all_local = out.all_local && is_local(out.factors.back());
  }
  // r -> (e_i r) must be a bijection onto the product, orthogonal idempotents summing to 1
  Elem sum = r.zero();
  for (std::size_t i = 0; i < prim.size(); ++i) {
    sum = r.add(sum, prim[i]);
    for (std::size_t j = i + 1; j < prim.size(); ++j)
      if (r.mul(prim[i], prim[j]) != r.zero()) out.is_iso = false;
  }
  if (sum != r.one()) out.is_iso = false;
  std::size_t prod = 1;
  for (const FiniteRing& f : out.factors) prod *= f.order();
  if (prod != r.order()) out.is_iso = false;
  std::set<std::vector<Elem>> images;
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> img;
    for (Elem e : prim) img.push_back(r.mul(e, x));
    images.insert(std::move(img));
  }
  if (images.size() != r.order()) out.is_iso = false;
  return out;
}

Ideal annihilator(const FiniteRing& r, const std::vector<Elem>& subset) {
  Bitset s(r.order());
  for (Elem a = 0; a < size_of(r); ++a)
    if (std::all_of(subset.begin(), subset.end(), [&](Elem x) { return r.mul(a, x) == r.zero(); })) s.set(a);
  if (!is_ideal(r, s)) throw std::logic_error("annihilator is not an ideal in " + r.name());
  return Ideal{s, false};
}

bool depth_zero(const FiniteRing& r_local) {
  const Bitset m = maximal_ideal_of_local(r_local);
  return annihilator(r_local, m.members()).size() > 1;
}

bool hom_nonzero(const FiniteRing& r, const Bitset& maximal_ideal) {
  const Elem n = size_of(r);
  // coset representative of each element of R / M
  std::vector<Elem> coset(n, n);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (coset[a] != n) continue;
    reps.push_back(a);
    for (Elem m : maximal_ideal.members()) coset[r.add(a, m)] = a;
  }
  for (Elem y = 0; y < n; ++y) {
    if (y == r.zero()) continue;
    // candidate map: (a + M) -> a y, well defined iff constant on each coset
    bool well_defined = true;
    for (Elem a = 0; a < n && well_defined; ++a) well_defined = r.mul(a, y) == r.mul(coset[a], y);
    if (well_defined) return true;
  }
  return false;
}

bool hom_criterion(const FiniteRing& r) {
  for (const Ideal& m : ideals(r))
    if (m.maximal && !hom_nonzero(r, m.members)) return false;
  return true;
}

bool is_r_linear(const FiniteRing& r, const Bitset& ideal, const std::vector<std::pair<Elem, Elem>>& map) {
  std::vector<std::optional<Elem>> f(r.order());
  for (auto [x, y] : map) {
    if (!ideal.test(x) || f[x]) return false;
    f[x] = y;
  }
  for (Elem x : ideal.members()) {
    if (!f[x]) return false;
    for (Elem y : ideal.members())
      if (*f[r.add(x, y)] != r.add(*f[x], *f[y])) return false;
    for (Elem a = 0; a < size_of(r); ++a)
      if (*f[r.mul(a, x)] != r.mul(a, *f[x])) return false;
  }
  return true;
}

bool is_multiplication_map(const FiniteRing& r, const std::vector<std::pair<Elem, Elem>>& map) {
  for (Elem c = 0; c < size_of(r); ++c)
    if (std::all_of(map.begin(), map.end(), [&](auto xy) { return r.mul(c, xy.first) == xy.second; })) return true;
  return false;
}

SelfInjectiveResult is_self_injective(const FiniteRing& r, std::size_t cap) {
  if (r.order() > cap) throw CapExceeded(r.name() + ": order exceeds the Baer enumeration cap");
  const Elem n = size_of(r);
  std::vector<Ideal> all = ideals(r);
  for (const Ideal& ideal : all) {
    if (ideal.size() <= 1) continue;
    // R-module generators of the ideal, greedily
    std::vector<Elem> gens;
    Bitset span(n);
    span.set(r.zero());
    std::vector<Bitset> spans{span};
    for (Elem x : ideal.members.members()) {
      if (span.test(x)) continue;
      gens.push_back(x);
      span = ideal_sum(r, span, principal(r, x));
      spans.push_back(span);
    }
    // Induct over span(g_1..g_j). A hom on it that is multiplication by c
    // extends to g_{j+1} -> y iff a g_{j+1} in span implies c a g_{j+1} = a y.
    // A consistent y that no multiplication map realizes gives a
    // counterexample on span(g_1..g_{j+1}), itself an ideal.
    for (std::size_t j = 0; j < gens.size(); ++j) {
      std::map<std::vector<Elem>, Elem> prefixes;  // restriction to g_1..g_j -> some c
      std::set<std::vector<Elem>> extended;        // restrictions to g_1..g_{j+1}
      for (Elem c = 0; c < n; ++c) {
        std::vector<Elem> v;
        for (std::size_t i = 0; i < j; ++i) v.push_back(r.mul(c, gens[i]));
        prefixes.emplace(v, c);
        v.push_back(r.mul(c, gens[j]));
        extended.insert(std::move(v));
      }
      std::vector<Elem> back;  // a with a g_{j+1} in the span
      for (Elem a = 0; a < n; ++a)
        if (spans[j].test(r.mul(a, gens[j]))) back.push_back(a);
      for (const auto& [prefix, c] : prefixes) {
        std::vector<Elem> v = prefix;
        v.push_back(0);
        for (Elem y = 0; y < n; ++y) {
          v.back() = y;
          if (extended.count(v)) continue;
          const bool consistent = std::all_of(back.begin(), back.end(), [&](Elem a) {
            return r.mul(c, r.mul(a, gens[j])) == r.mul(a, y);
          });
          if (!consistent) continue;
          std::vector<std::optional<Elem>> f(n);
          for (Elem x : spans[j].members())
            for (Elem a = 0; a < n; ++a) f[r.add(x, r.mul(a, gens[j]))] = r.add(r.mul(c, x), r.mul(a, y));
          BaerCounterexample ce{spans[j + 1], {}};
          for (Elem x : spans[j + 1].members()) ce.map.emplace_back(x, *f[x]);
          return {false, std::move(ce)};
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<Bitset> unital_subrings(const FiniteRing& r, std::size_t cap) {
  if (r.order() > cap) throw CapExceeded(r.name() + ": order exceeds the subring enumeration cap");
  const Elem n = size_of(r);
  auto close = [&](Bitset s) {
    for (bool changed = true; changed;) {
      changed = false;
      const auto m = s.members();
      for (Elem x : m)
        for (Elem y : m)
          for (Elem z : {r.add(x, y), r.mul(x, y), r.neg(x)})
            if (!s.test(z)) {
              s.set(z);
              changed = true;
            }
    }
    return s;
  };
  Bitset start(n);
  start.set(r.zero());
  start.set(r.one());
  std::set<Bitset> seen{close(start)};
  std::vector<Bitset> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const Bitset& s : frontier)
      for (Elem x = 0; x < n; ++x) {
        if (s.test(x)) continue;
        Bitset t = s;
        t.set(x);
        t = close(std::move(t));
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

SubringLawReport idealization_subring_law(const RingSpec& spec, std::size_t cap) {
  if (spec.kind != RingSpec::Kind::Idealize || spec.parts[0].kind != RingSpec::Kind::Zmod || spec.module.action)
    throw std::invalid_argument("the subring law is checked for idealizations Z/n x M with the integer action");
  const FiniteRing r = build_finite(spec, {cap, false});
  const std::size_t k = spec.module.size();
  const std::size_t b = spec.parts[0].n;
  SubringLawReport rep;
  const auto subs = unital_subrings(r, cap);
  rep.subrings = subs.size();
  for (const Bitset& s : subs) {
    // H = {x : (0, x) in S}; S must be exactly base x H
    std::vector<bool> h(k, false);
    for (Elem x = 0; x < k; ++x) h[x] = s.test(x);
    for (Elem rr = 0; rr < b; ++rr)
      for (Elem x = 0; x < k; ++x)
        if (s.test(rr * k + x) != h[x]) rep.all_product_form = false;
  }
  rep.module_subgroups = subgroups(FinAbGroup(std::vector<std::uint64_t>(spec.module.orders.begin(),
                                                                          spec.module.orders.end())),
                                   std::max<std::size_t>(k, 128))
                             .size();
  return rep;
}

bool gen_module_surjection(const FiniteRing& base, const FiniteModule& m, const std::vector<Elem>& gens) {
  const Elem n = size_of(base);
  const Elem k = static_cast<Elem>(m.size());
  // submodule generated by gens
  std::vector<bool> span(k, false);
  span[0] = true;
  for (Elem g : gens) {
    if (g >= k) throw std::invalid_argument("generator out of range");
    std::vector<bool> next(k, false);
    for (Elem x = 0; x < k; ++x)
      if (span[x])
        for (Elem a = 0; a < n; ++a) next[m.add(x, m.act(a, g))] = true;
    span = std::move(next);
  }
  if (std::find(span.begin(), span.end(), false) != span.end())
    throw std::invalid_argument("the given elements do not generate the module");

  std::vector<bool> image(k, false);
  image[0] = true;
  for (Elem g : gens) {
    // Ann(g) and the cosets of R / Ann(g)
    std::vector<Elem> ann;
    for (Elem a = 0; a < n; ++a)
      if (m.act(a, g) == 0) ann.push_back(a);
    std::vector<Elem> rep(n, n);
    std::vector<Elem> reps;
    for (Elem a = 0; a < n; ++a) {
      if (rep[a] != n) continue;
      reps.push_back(a);
      for (Elem z : ann) rep[base.add(a, z)] = a;
    }
    // well defined on cosets and R-linear on this summand
    for (Elem a = 0; a < n; ++a) {
      if (m.act(a, g) != m.act(rep[a], g)) return false;
      for (Elem s = 0; s < n; ++s) {
        if (m.act(base.mul(s, a), g) != m.act(s, m.act(a, g))) return false;
        if (m.act(base.add(s, a), g) != m.add(m.act(s, g), m.act(a, g))) return false;
      }
    }
    std::vector<bool> next(k, false);
    for (Elem x = 0; x < k; ++x)
      if (image[x])
        for (Elem a : reps) next[m.add(x, m.act(a, g))] = true;
    image = std::move(next);
  }
  return std::find(image.begin(), image.end(), false) == image.end();
}

EffectiveReport check_effective(const EffectiveRing& r) {
  EffectiveReport rep;
  const auto w = r.find_non_unit_non_zero_divisor();
  rep.balanced = false;
  rep.witness = r.render(w);
  rep.depth_zero_all = true;
  rep.hom_nonzero_any = false;
  for (const auto& p : r.sample_primes()) {
    rep.primes.push_back(r.render(p));
    // In a domain ann(p) = 0 for p != 0: the maximal ideal of R_(p) contains
    // the non-zero-divisor p, and Hom(R/(p), R) = ann(p) = 0.
    const bool ann_nonzero = r.is_zero_divisor(p);
    rep.depth_zero_all = rep.depth_zero_all && ann_nonzero;
    rep.hom_nonzero_any = rep.hom_nonzero_any || ann_nonzero;
  }
  return rep;
}

}  // namespace cardalg
