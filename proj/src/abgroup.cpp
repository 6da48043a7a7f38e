#include "cardalg/abgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cardalg/cardinal_ops.hpp"
#include "cardalg/parse_util.hpp"

namespace cardalg {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string join_orders(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- FinAbGroup

FinAbGroup::FinAbGroup(const std::vector<std::uint64_t>& cyclic_orders) {
  for (std::uint64_t n : cyclic_orders) {
    if (n == 0) throw std::invalid_argument("cyclic orders must be >= 1");
    for (std::uint64_t p = 2; n > 1; ++p) {
      if (p * p > n) p = n;
      std::uint64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      if (q > 1) {
        if (q > 0xffffffffu) throw std::invalid_argument("cyclic factor too large");
        factors_.push_back(static_cast<std::uint32_t>(q));
      }
    }
  }
  std::sort(factors_.begin(), factors_.end());
  for (auto q : factors_) {
    if (order_ > (std::size_t{1} << 40) / q) throw std::invalid_argument("group too large");
    order_ *= q;
  }
}

std::vector<std::uint32_t> FinAbGroup::tuple(std::uint32_t a) const {
  std::vector<std::uint32_t> d(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    d[i] = a % factors_[i];
    a /= factors_[i];
  }
  return d;
}

std::uint32_t FinAbGroup::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t x = 0;
  std::size_t scale = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::uint32_t q = factors_[i];
    x += static_cast<std::uint32_t>(((a % q + b % q) % q) * scale);
    a /= q;
    b /= q;
    scale *= q;
  }
  return x;
}

std::uint32_t FinAbGroup::neg(std::uint32_t a) const {
  std::uint32_t x = 0;
  std::size_t scale = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::uint32_t q = factors_[i];
    x += static_cast<std::uint32_t>(((q - a % q) % q) * scale);
    a /= q;
    scale *= q;
  }
  return x;
}

std::string FinAbGroup::label(std::uint32_t a) const {
  const auto d = tuple(a);
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
  return s + ")";
}

Bitset subgroup_generated(const FinAbGroup& g, const std::vector<std::uint32_t>& gens) {
  Bitset s(g.order());
  s.set(g.zero());
  std::vector<std::uint32_t> members{g.zero()};
  for (std::uint32_t x : gens) {
    // s + <x>
    std::vector<std::uint32_t> cyc{g.zero()};
    for (std::uint32_t y = x; y != g.zero(); y = g.add(y, x)) cyc.push_back(y);
    std::vector<std::uint32_t> next;
    Bitset t(g.order());
    for (std::uint32_t a : members)
      for (std::uint32_t c : cyc) {
        const std::uint32_t z = g.add(a, c);
        if (!t.test(z)) {
          t.set(z);
          next.push_back(z);
        }
      }
    s = std::move(t);
    members = std::move(next);
  }
  return s;
}

std::vector<Bitset> subgroups(const FinAbGroup& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds cap " +
                                         std::to_string(cap));
  const auto n = static_cast<std::uint32_t>(g.order());
  std::set<Bitset> cyclic;
  std::vector<std::uint32_t> cyclic_gen;
  for (std::uint32_t a = 0; a < n; ++a)
    if (cyclic.insert(subgroup_generated(g, {a})).second) cyclic_gen.push_back(a);
  std::set<Bitset> seen(cyclic.begin(), cyclic.end());
  std::vector<Bitset> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const Bitset& h : frontier)
      for (std::uint32_t a : cyclic_gen) {
        if (h.test(a)) continue;
        // h + <a>
        Bitset j(g.order());
        const auto hm = h.members();
        for (std::uint32_t x : hm)
          for (std::uint32_t y = g.zero();;) {
            j.set(g.add(x, y));
            y = g.add(y, a);
            if (y == g.zero()) break;
          }
        if (seen.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<Bitset> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
  return out;
}

bool has_proper_same_card_subgroup(const FinAbGroup& g, std::size_t cap) {
  for (const Bitset& h : subgroups(g, cap)) {
    bool proper = false;
    for (std::uint32_t a = 0; a < g.order() && !proper; ++a) proper = !h.test(a);
    if (proper && h.count() == g.order()) return true;
  }
  return false;
}

bool prufer_truncation_check(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < n; ++i) order *= p;
  if (order > 1u << 16) throw CapExceeded("p^n exceeds the enumeration cap");
  const FinAbGroup g(std::vector<std::uint64_t>{order});
  const auto subs = subgroups(g, order);
  if (subs.size() != n + 1) return false;
  std::uint64_t expected = 1;
  for (std::size_t k = 0; k < subs.size(); ++k, expected *= p) {
    if (subs[k].count() != expected) return false;
    if (k > 0 && !subs[k - 1].is_subset_of(subs[k])) return false;
  }
  return true;
}

// ----------------------------------------------------------------- GroupSpec

GroupAtom GroupAtom::finite(std::vector<std::uint64_t> orders) {
  for (auto d : orders)
    if (d == 0) throw std::invalid_argument("fin: orders must be >= 1");
  GroupAtom a;
  a.kind = Kind::FiniteAb;
  a.orders = std::move(orders);
  return a;
}

GroupAtom GroupAtom::free(std::uint32_t rank) {
  if (rank == 0) throw std::invalid_argument("free: rank must be >= 1");
  GroupAtom a;
  a.kind = Kind::Free;
  a.n = rank;
  return a;
}

GroupAtom GroupAtom::prufer(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("prufer: " + std::to_string(p) + " is not prime");
  GroupAtom a;
  a.kind = Kind::Prufer;
  a.n = p;
  return a;
}

GroupAtom GroupAtom::countable_sum(GroupAtom atom) {
  GroupAtom a;
  a.kind = Kind::CountableSum;
  a.inner.push_back(std::move(atom));
  return a;
}

bool GroupAtom::is_trivial() const {
  switch (kind) {
    case Kind::FiniteAb: return std::all_of(orders.begin(), orders.end(), [](auto d) { return d == 1; });
    case Kind::CountableSum: return inner[0].is_trivial();
    default: return false;
  }
}

Cardinal GroupAtom::cardinality() const {
  switch (kind) {
    case Kind::FiniteAb: {
      Natural n = 1;
      for (auto d : orders) n *= d;
      return Cardinal::finite(n);
    }
    case Kind::Free:
    case Kind::Prufer: return aleph0();
    case Kind::CountableSum: return card_directsum(inner[0].cardinality(), aleph0());
  }
  return {};
}

std::string GroupAtom::to_string() const {
  switch (kind) {
    case Kind::FiniteAb: return "fin(" + join_orders(orders) + ")";
    case Kind::Free: return "free(" + std::to_string(n) + ")";
    case Kind::Prufer: return "prufer(" + std::to_string(n) + ")";
    case Kind::CountableSum: return "sum_inf(" + inner[0].to_string() + ")";
  }
  return {};
}

Cardinal GroupSpec::cardinality() const {
  Cardinal c = Cardinal::finite(1);
  for (const GroupAtom& a : atoms) c = card_mul(c, a.cardinality(), Mode::ZFC);
  return c;
}

std::string GroupSpec::to_string() const {
  if (atoms.empty()) return "fin()";
  std::string s;
  for (std::size_t i = 0; i < atoms.size(); ++i) s += (i ? " + " : "") + atoms[i].to_string();
  return s;
}

namespace {

class GroupParser {
 public:
  explicit GroupParser(std::string_view text) : cur_(text) {}

  GroupSpec parse() {
    GroupSpec g;
    do g.atoms.push_back(atom());
    while (cur_.accept("+"));
    cur_.expect_end();
    return g;
  }

 private:
  GroupAtom atom() {
    cur_.skip_space();
    const std::size_t start = cur_.offset();
    std::string id;
    const std::vector<std::string> kinds{"fin", "free", "prufer", "sum_inf"};
    if (!cur_.identifier(id)) cur_.fail(kinds, "expected a group atom");
    try {
      if (id == "fin") {
        cur_.expect("(");
        std::vector<std::uint64_t> orders;
        if (!cur_.accept(")")) {
          do orders.push_back(cur_.small_natural(1u << 30));
          while (cur_.accept(","));
          cur_.expect(")");
        }
        return GroupAtom::finite(std::move(orders));
      }
      if (id == "free" || id == "prufer") {
        cur_.expect("(");
        const auto n = static_cast<std::uint32_t>(cur_.small_natural(1u << 30));
        cur_.expect(")");
        return id == "free" ? GroupAtom::free(n) : GroupAtom::prufer(n);
      }
      if (id == "sum_inf") {
        cur_.expect("(");
        GroupAtom inner = atom();
        cur_.expect(")");
        return GroupAtom::countable_sum(std::move(inner));
      }
    } catch (const std::invalid_argument& e) {
      cur_.fail_at(start, {}, e.what());
    }
    cur_.fail_at(start, kinds, "unknown group atom '" + id + "'");
  }

  Cursor cur_;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return GroupParser(text).parse(); }

std::string to_string(GroupClass c) {
  switch (c) {
    case GroupClass::Finite: return "finite";
    case GroupClass::Prufer: return "prufer";
    case GroupClass::HasProperSameCardSubgroup: return "has-proper-same-card-subgroup";
  }
  return {};
}

GroupClass classify(const GroupSpec& spec) {
  std::vector<const GroupAtom*> nontrivial;
  for (const GroupAtom& a : spec.atoms)
    if (!a.is_trivial()) nontrivial.push_back(&a);
  const bool finite = std::all_of(nontrivial.begin(), nontrivial.end(),
                                  [](const GroupAtom* a) { return a->kind == GroupAtom::Kind::FiniteAb; });
  if (finite) return GroupClass::Finite;
  if (nontrivial.size() == 1 && nontrivial[0]->kind == GroupAtom::Kind::Prufer) return GroupClass::Prufer;
  return GroupClass::HasProperSameCardSubgroup;
}

SameCardWitness same_card_subgroup_witness(const GroupSpec& spec) {
  const GroupClass c = classify(spec);
  if (c != GroupClass::HasProperSameCardSubgroup)
    throw std::invalid_argument(spec.to_string() + " is " + to_string(c) +
                                ": it has no proper subgroup of the same cardinality");
  using K = GroupAtom::Kind;
  SameCardWitness w;
  w.group = spec;
  w.maps.assign(spec.atoms.size(), AtomMap::Full);
  w.subgroup = spec;
  auto find = [&](auto pred) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < spec.atoms.size(); ++i)
      if (pred(spec.atoms[i])) return i;
    return std::nullopt;
  };

  if (auto i = find([](const GroupAtom& a) { return a.kind == K::Free; })) {
    w.maps[*i] = AtomMap::Doubled;
    w.outside_atom = *i;
    std::string e = "(1";
    for (std::uint32_t k = 1; k < spec.atoms[*i].n; ++k) e += ", 0";
    w.outside = e + ") in " + spec.atoms[*i].to_string() + ", odd first coordinate";
    w.rule = "free summand: replace Z by 2Z, which is isomorphic to Z";
    return w;
  }
  if (auto i = find([](const GroupAtom& a) { return a.kind == K::CountableSum && !a.is_trivial(); })) {
    w.maps[*i] = AtomMap::DropFirstSummand;
    w.outside_atom = *i;
    w.outside = "a nonzero element of copy 0 of " + spec.atoms[*i].to_string();
    w.rule = "countable sum of nontrivial groups: drop one summand";
    return w;
  }
  // Only finite and Prufer atoms remain, with at least one Prufer atom and
  // something nontrivial beside it.
  const std::size_t keep = *find([](const GroupAtom& a) { return a.kind == K::Prufer; });
  w.subgroup.atoms = {spec.atoms[keep]};
  bool have_outside = false;
  for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
    if (i == keep) continue;
    w.maps[i] = AtomMap::Zero;
    const GroupAtom& a = spec.atoms[i];
    if (have_outside || a.is_trivial()) continue;
    have_outside = true;
    w.outside_atom = i;
    if (a.kind == K::Prufer) {
      w.outside = "1/" + std::to_string(a.n) + " + Z in " + a.to_string();
    } else {
      std::string e = "(";
      bool placed = false;
      for (std::size_t k = 0; k < a.orders.size(); ++k) {
        const bool here = !placed && a.orders[k] > 1;
        placed = placed || here;
        e += (k ? ", " : "") + std::string(here ? "1" : "0");
      }
      w.outside = e + ") in " + a.to_string();
    }
  }
  w.rule = "keep " + spec.atoms[keep].to_string() + " and drop the other summands";
  return w;
}

bool validate_witness(const SameCardWitness& w, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  using K = GroupAtom::Kind;
  const auto& atoms = w.group.atoms;
  if (w.maps.size() != atoms.size()) return fail("one map per atom is required");
  if (w.outside_atom >= atoms.size()) return fail("outside element refers to a missing atom");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (w.maps[i] == AtomMap::Doubled && atoms[i].kind != K::Free) return fail("2Z only applies to free atoms");
    if (w.maps[i] == AtomMap::DropFirstSummand && atoms[i].kind != K::CountableSum)
      return fail("dropping a summand only applies to countable sums");
  }
  // Properness: the outside atom has a nonzero element missed by its map.
  const GroupAtom& oa = atoms[w.outside_atom];
  switch (w.maps[w.outside_atom]) {
    case AtomMap::Full: return fail("the outside element's atom is kept whole");
    case AtomMap::Zero:
      if (oa.is_trivial()) return fail("the outside element's atom is trivial");
      break;
    case AtomMap::Doubled: break;  // 1 is not in 2Z
    case AtomMap::DropFirstSummand:
      if (oa.is_trivial()) return fail("the dropped summand is trivial");
      break;
  }
  // Cardinality of the image, atom by atom.
  Cardinal image = Cardinal::finite(1);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Cardinal c;
    switch (w.maps[i]) {
      case AtomMap::Full: c = atoms[i].cardinality(); break;
      case AtomMap::Zero: c = Cardinal::finite(1); break;
      case AtomMap::Doubled: c = aleph0(); break;
      case AtomMap::DropFirstSummand: c = card_directsum(atoms[i].inner[0].cardinality(), aleph0()); break;
    }
    image = card_mul(image, c, Mode::ZFC);
  }
  const Cardinal full = w.group.cardinality();
  if (compare_normal(image, full) != CompareResult::Equal)
    return fail("subgroup cardinality " + image.to_string() + " differs from " + full.to_string());
  if (compare_normal(w.subgroup.cardinality(), full) != CompareResult::Equal)
    return fail("the stated subgroup has cardinality " + w.subgroup.cardinality().to_string());
  return true;
}

}  // namespace cardalg
