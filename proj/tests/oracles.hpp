#pragma once

// Independent brute-force oracles and random generators used by the tests.
// Nothing here calls into the engine's rewriting or decision procedures.

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cardalg/abgroup.hpp"
#include "cardalg/finring.hpp"
#include "cardalg/ordinal.hpp"

namespace cardalg {

inline void PrintTo(const Cardinal& c, std::ostream* os) { *os << c.to_string(); }
inline void PrintTo(CompareResult r, std::ostream* os) { *os << to_string(r); }
inline void PrintTo(const Ordinal& o, std::ostream* os) { *os << o.to_string(); }

}  // namespace cardalg

namespace oracle {

using cardalg::Natural;
using cardalg::Ordinal;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// ------------------------------------------------------------------ ordinals

// Random ordinal below w^w^2, built from its own term list.
inline Ordinal random_ordinal(Rng& rng, int depth = 2) {
  std::vector<Ordinal::Term> terms;
  std::vector<Ordinal> exps;
  const int k = static_cast<int>(rng.below(4));
  for (int i = 0; i < k; ++i) {
    if (depth > 0 && rng.below(4) == 0)
      exps.push_back(random_ordinal(rng, depth - 1));
    else
      exps.push_back(Ordinal::finite(rng.below(4)));
  }
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return a > b; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  for (auto& e : exps) terms.push_back({e, Natural(rng.range(1, 3))});
  return Ordinal::from_terms(std::move(terms));
}

// Lexicographic comparison on (exponent, coefficient) lists, written out.
inline int cnf_compare(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    const int e = cnf_compare(x[i].exponent, y[i].exponent);
    if (e != 0) return e;
    if (x[i].coefficient != y[i].coefficient) return x[i].coefficient < y[i].coefficient ? -1 : 1;
  }
  if (x.size() == y.size()) return 0;
  return x.size() < y.size() ? -1 : 1;
}

// ------------------------------------------------------ GCH cardinal oracle

// A cardinal under GCH is a natural or aleph(index).
struct GchCard {
  bool infinite = false;
  Natural n;
  Ordinal index;

  static GchCard fin(Natural v) { return {false, std::move(v), {}}; }
  static GchCard aleph(Ordinal i) { return {true, 0, std::move(i)}; }
  friend bool operator==(const GchCard& a, const GchCard& b) {
    return a.infinite == b.infinite && (a.infinite ? a.index == b.index : a.n == b.n);
  }
  std::string to_string() const { return infinite ? "aleph(" + index.to_string() + ")" : n.str(); }
};

inline int gch_compare(const GchCard& a, const GchCard& b) {
  if (a.infinite != b.infinite) return a.infinite ? 1 : -1;
  if (!a.infinite) return a.n == b.n ? 0 : (a.n < b.n ? -1 : 1);
  return cnf_compare(a.index, b.index);
}
inline GchCard gch_max(const GchCard& a, const GchCard& b) { return gch_compare(a, b) >= 0 ? a : b; }
inline bool gch_zero(const GchCard& a) { return !a.infinite && a.n == 0; }

inline GchCard gch_add(const GchCard& a, const GchCard& b) {
  if (!a.infinite && !b.infinite) return GchCard::fin(a.n + b.n);
  return gch_max(a, b);
}
inline GchCard gch_mul(const GchCard& a, const GchCard& b) {
  if (gch_zero(a) || gch_zero(b)) return GchCard::fin(0);
  if (!a.infinite && !b.infinite) return GchCard::fin(a.n * b.n);
  return gch_max(a, b);
}
inline bool limit_index(const Ordinal& i) {
  return !i.is_zero() && !(i.terms().back().exponent.is_zero());
}
inline GchCard gch_pow(const GchCard& a, const GchCard& b) {
  if (gch_zero(b)) return GchCard::fin(1);
  if (gch_zero(a)) return GchCard::fin(0);
  if (!a.infinite && a.n == 1) return GchCard::fin(1);
  if (!a.infinite && !b.infinite) {
    Natural r = 1;
    for (Natural i = 0; i < b.n; ++i) r *= a.n;
    return GchCard::fin(r);
  }
  if (!b.infinite) return a;                                         // k^n = k
  if (!a.infinite || cnf_compare(b.index, a.index) >= 0)            // 2 <= a <= b
    return GchCard::aleph(cardalg::successor(b.index));
  // b < a: regular a stays, countable cofinality jumps
  return limit_index(a.index) ? GchCard::aleph(cardalg::successor(a.index)) : a;
}

// Tiny AST of random expressions, rendered in the engine's syntax.
struct Node {
  enum Kind { Num, Aleph, PowSet, Add, Mul, Pow, Powser, Poly, MonoidRing, Tfr, Finsets, Dsum };
  Kind kind = Num;
  std::uint64_t n = 0;
  Ordinal index;
  std::vector<Node> kids;
};

inline std::string render(const Node& x) {
  auto wrap = [](const Node& k) { return "(" + render(k) + ")"; };
  switch (x.kind) {
    case Node::Num: return std::to_string(x.n);
    case Node::Aleph: return "aleph(" + x.index.to_string() + ")";
    case Node::PowSet: return "2^aleph(" + x.index.to_string() + ")";
    case Node::Add: return wrap(x.kids[0]) + " + " + wrap(x.kids[1]);
    case Node::Mul: return wrap(x.kids[0]) + " * " + wrap(x.kids[1]);
    case Node::Pow: return wrap(x.kids[0]) + "^" + wrap(x.kids[1]);
    case Node::Powser: return "card_powser(" + render(x.kids[0]) + ")";
    case Node::Poly: return "card_poly(" + render(x.kids[0]) + ", " + render(x.kids[1]) + ")";
    case Node::MonoidRing: return "card_monoid_ring(" + render(x.kids[0]) + ", " + render(x.kids[1]) + ")";
    case Node::Tfr: return "card_tfr(" + render(x.kids[0]) + ")";
    case Node::Finsets: return "card_finsets(" + render(x.kids[0]) + ")";
    case Node::Dsum: return "card_dsum(" + render(x.kids[0]) + ", " + render(x.kids[1]) + ")";
  }
  return "";
}

inline GchCard gch_eval(const Node& x) {
  switch (x.kind) {
    case Node::Num: return GchCard::fin(x.n);
    case Node::Aleph: return GchCard::aleph(x.index);
    case Node::PowSet: return GchCard::aleph(cardalg::successor(x.index));
    case Node::Add: return gch_add(gch_eval(x.kids[0]), gch_eval(x.kids[1]));
    case Node::Mul: return gch_mul(gch_eval(x.kids[0]), gch_eval(x.kids[1]));
    case Node::Pow: return gch_pow(gch_eval(x.kids[0]), gch_eval(x.kids[1]));
    case Node::Powser: {
      const GchCard r = gch_eval(x.kids[0]);
      return r.infinite ? gch_pow(r, GchCard::aleph(Ordinal())) : GchCard::aleph(Ordinal::finite(1));
    }
    case Node::Poly:
      return gch_max(GchCard::aleph(Ordinal()), gch_max(gch_eval(x.kids[0]), gch_eval(x.kids[1])));
    case Node::MonoidRing: {
      const GchCard r = gch_eval(x.kids[0]), m = gch_eval(x.kids[1]);
      return m.infinite ? gch_max(r, m) : gch_pow(r, m);
    }
    case Node::Tfr: return gch_eval(x.kids[0]);
    case Node::Finsets: {
      const GchCard s = gch_eval(x.kids[0]);
      return s.infinite ? s : gch_pow(GchCard::fin(2), s);
    }
    case Node::Dsum: {
      const GchCard m = gch_eval(x.kids[0]), s = gch_eval(x.kids[1]);
      if (!s.infinite || gch_compare(m, GchCard::fin(1)) <= 0) return gch_pow(m, s);
      return gch_mul(m, s);
    }
  }
  return {};
}

// Whether every function application has arguments inside its domain.
inline bool domain_ok(const Node& x) {
  for (const Node& k : x.kids)
    if (!domain_ok(k)) return false;
  auto at_least = [&](std::size_t i, std::uint64_t lo) {
    const GchCard v = gch_eval(x.kids[i]);
    return v.infinite || v.n >= lo;
  };
  switch (x.kind) {
    case Node::Powser: return at_least(0, 2);
    case Node::Poly:
    case Node::MonoidRing: return at_least(0, 2) && at_least(1, 1);
    case Node::Tfr: return at_least(0, 1);
    default: return true;
  }
}

inline Ordinal small_index(Rng& rng) {
  static const std::vector<std::string> pool{"0", "1", "2", "3", "w", "w+1", "w*2", "w^2"};
  return Ordinal::parse(rng.pick(pool));
}

// Random expression. Arguments of the algebra functions are kept inside
// their domains (rings of order >= 2, nonempty monoids and variable sets),
// and finite towers stay small.
inline Node random_node(Rng& rng, int depth, bool small_finite = false) {
  Node x;
  const std::uint64_t choice = depth <= 0 ? rng.below(3) : rng.below(12);
  auto at_least_two = [&](int d) {
    Node r = random_node(rng, d, true);
    if (r.kind == Node::Num && r.n < 2) r.n = 2 + r.n;
    return r;
  };
  switch (choice) {
    case 0:
      x.kind = Node::Num;
      x.n = rng.below(small_finite ? 4 : 6);
      return x;
    case 1:
      x.kind = Node::Aleph;
      x.index = small_index(rng);
      return x;
    case 2:
      x.kind = Node::PowSet;
      x.index = small_index(rng);
      return x;
    case 3: x.kind = Node::Add; break;
    case 4: x.kind = Node::Mul; break;
    case 5:
      x.kind = Node::Pow;
      x.kids = {random_node(rng, depth - 1, true), random_node(rng, 0, true)};
      return x;
    case 6:
      x.kind = Node::Powser;
      x.kids = {at_least_two(depth - 1)};
      return x;
    case 7:
      x.kind = Node::Poly;
      x.kids = {at_least_two(depth - 1), random_node(rng, depth - 1, true)};
      if (x.kids[1].kind == Node::Num && x.kids[1].n == 0) x.kids[1].n = 1;
      return x;
    case 8:
      x.kind = Node::MonoidRing;
      x.kids = {at_least_two(depth - 1), random_node(rng, depth - 1, true)};
      if (x.kids[1].kind == Node::Num && x.kids[1].n == 0) x.kids[1].n = 1;
      return x;
    case 9:
      x.kind = Node::Tfr;
      x.kids = {random_node(rng, depth - 1, small_finite)};
      if (x.kids[0].kind == Node::Num && x.kids[0].n == 0) x.kids[0].n = 1;
      return x;
    case 10:
      x.kind = Node::Finsets;
      x.kids = {random_node(rng, depth - 1, true)};
      return x;
    default:
      x.kind = Node::Dsum;
      x.kids = {random_node(rng, depth - 1, true), random_node(rng, depth - 1, true)};
      if (x.kids[0].kind == Node::Num && x.kids[0].n == 0) x.kids[0].n = 1;
      return x;
  }
  x.kids = {random_node(rng, depth - 1, small_finite), random_node(rng, depth - 1, small_finite)};
  return x;
}

// ------------------------------------------------------------ finite rings

// Ideals by exhaustive subset search; only for tiny rings.
inline std::vector<std::vector<cardalg::Elem>> brute_ideals(const cardalg::FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<std::vector<cardalg::Elem>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> r.zero() & 1)) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && ok; ++b) {
        if ((mask >> b & 1) && !(mask >> r.add(a, b) & 1)) ok = false;
        if (!(mask >> r.mul(b, a) & 1)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<cardalg::Elem> members;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1) members.push_back(static_cast<cardalg::Elem>(a));
    out.push_back(std::move(members));
  }
  return out;
}

inline std::size_t count_units(const cardalg::FiniteRing& r) {
  std::size_t c = 0;
  for (cardalg::Elem a = 0; a < r.order(); ++a)
    for (cardalg::Elem b = 0; b < r.order(); ++b)
      if (r.mul(a, b) == r.one()) {
        ++c;
        break;
      }
  return c;
}

inline std::size_t count_zero_divisors(const cardalg::FiniteRing& r) {
  std::size_t c = 0;
  for (cardalg::Elem a = 0; a < r.order(); ++a)
    for (cardalg::Elem b = 0; b < r.order(); ++b)
      if (b != r.zero() && r.mul(a, b) == r.zero()) {
        ++c;
        break;
      }
  return c;
}

// Baer's criterion by listing every map I -> R on every proper nonzero
// ideal. Feasible for order <= 8.
inline bool brute_self_injective(const cardalg::FiniteRing& r) {
  const std::size_t n = r.order();
  for (const auto& ideal : brute_ideals(r)) {
    if (ideal.size() <= 1 || ideal.size() == n) continue;
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < ideal.size(); ++i) pos[ideal[i]] = i;
    std::vector<cardalg::Elem> f(ideal.size(), 0);
    for (;;) {
      bool linear = true;
      for (std::size_t i = 0; i < ideal.size() && linear; ++i)
        for (std::size_t j = 0; j < ideal.size() && linear; ++j)
          linear = f[pos[r.add(ideal[i], ideal[j])]] == r.add(f[i], f[j]);
      for (std::size_t i = 0; i < ideal.size() && linear; ++i)
        for (cardalg::Elem a = 0; a < n && linear; ++a) linear = f[pos[r.mul(a, ideal[i])]] == r.mul(a, f[i]);
      if (linear) {
        bool mult = false;
        for (cardalg::Elem c = 0; c < n && !mult; ++c) {
          mult = true;
          for (std::size_t i = 0; i < ideal.size() && mult; ++i) mult = r.mul(c, ideal[i]) == f[i];
        }
        if (!mult) return false;
      }
      std::size_t k = 0;
      while (k < f.size() && ++f[k] == n) f[k++] = 0;
      if (k == f.size()) break;
    }
  }
  return true;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return b ? gcd(b, a % b) : a; }

inline std::size_t divisor_count(std::uint64_t n) {
  std::size_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

// ------------------------------------------------------------------- groups

// Subgroups of a finite abelian group by exhaustive subset search (order <= 16).
inline std::size_t brute_subgroup_count(const cardalg::FinAbGroup& g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {  // bit 0 is the identity
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.add(a, b) & 1)) closed = false;
    count += closed;
  }
  return count;
}

inline std::size_t partition_count(std::size_t n) {
  std::vector<std::size_t> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = k; i <= n; ++i) p[i] += p[i - k];
  return p[n];
}

// Number of abelian groups of order n up to isomorphism.
inline std::size_t abelian_group_count(std::uint64_t n) {
  std::size_t c = 1;
  for (std::uint64_t p = 2; n > 1; ++p) {
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    c *= partition_count(e);
  }
  return c;
}

// ---------------------------------------------------------------- bijections

// Pairs in diagonal order: (0,0), (0,1), (1,0), (0,2), (1,1), (2,0), ...
// matched against the closed form by walking, not by solving.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> diagonal_walk(std::uint64_t d_max) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t d = 0; d <= d_max; ++d)
    for (std::uint64_t m = 0; m <= d; ++m) out.emplace_back(m, d - m);
  return out;
}

}  // namespace oracle
