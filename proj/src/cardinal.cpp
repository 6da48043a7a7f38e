#include "cardalg/cardinal.hpp"

#include <algorithm>
#include <stdexcept>

namespace cardalg {

namespace {

// Recursion budget for the bound-chasing comparisons. Every inference step is
// sound, so running out of fuel only makes the answer less complete.
constexpr int kFuel = 12;

struct Bound {
  Cardinal term;
  bool strict;
};

bool le(const Cardinal& a, const Cardinal& b, int fuel);
bool lt(const Cardinal& a, const Cardinal& b, int fuel);

// Terms provably <= b (strict: provably < b).
std::vector<Bound> lower_bounds(const Cardinal& b) {
  std::vector<Bound> out;
  switch (b.kind()) {
    case Cardinal::Kind::PowSet: {
      const Cardinal& x = b.base();
      out.push_back({x, true});  // Cantor
      if (x.kind() == Cardinal::Kind::Aleph)  // k < 2^k gives k+ <= 2^k
        out.push_back({Cardinal::aleph(successor(x.index())), false});
      break;
    }
    case Cardinal::Kind::Exp:
      out.push_back({b.base(), konig_applies(b.base(), b.exponent())});
      out.push_back({Cardinal::powset(b.exponent()), false});
      break;
    default:
      break;
  }
  return out;
}

// Terms provably >= a.
std::vector<Bound> upper_bounds(const Cardinal& a, int fuel) {
  std::vector<Bound> out;
  if (a.kind() == Cardinal::Kind::Exp) {
    const Cardinal& b = a.base();
    const Cardinal& e = a.exponent();
    // b^e <= (2^b)^e = 2^(b*e) = max(2^b, 2^e)
    if (le(e, b, fuel))
      out.push_back({Cardinal::powset(b), false});
    else
      out.push_back({Cardinal::max_of({Cardinal::powset(e), Cardinal::powset(b)}), false});
  }
  return out;
}

bool le(const Cardinal& a, const Cardinal& b, int fuel) {
  if (a == b) return true;
  if (fuel <= 0) return false;
  --fuel;
  using K = Cardinal::Kind;
  if (a.kind() == K::Max)
    return std::all_of(a.options().begin(), a.options().end(),
                       [&](const Cardinal& x) { return le(x, b, fuel); });
  if (a.kind() == K::Between) return le(a.hi(), b, fuel);
  if (b.kind() == K::Max)
    return std::any_of(b.options().begin(), b.options().end(),
                       [&](const Cardinal& y) { return le(a, y, fuel); });
  if (b.kind() == K::Between) return le(a, b.lo(), fuel);

  if (a.is_finite()) return b.is_infinite() || a.value() <= b.value();
  if (b.is_finite()) return false;
  if (a.kind() == K::Aleph && b.kind() == K::Aleph) return a.index() <= b.index();
  if (a.kind() == K::PowSet && b.kind() == K::PowSet && le(a.base(), b.base(), fuel))
    return true;  // monotonicity
  if (a.kind() == K::Exp && b.kind() == K::Exp && le(a.base(), b.base(), fuel) &&
      le(a.exponent(), b.exponent(), fuel))
    return true;
  for (const Bound& l : lower_bounds(b))
    if (le(a, l.term, fuel)) return true;
  for (const Bound& u : upper_bounds(a, fuel))
    if (le(u.term, b, fuel)) return true;
  return false;
}

bool lt(const Cardinal& a, const Cardinal& b, int fuel) {
  if (a == b || fuel <= 0) return false;
  --fuel;
  using K = Cardinal::Kind;
  if (a.kind() == K::Max)
    return std::all_of(a.options().begin(), a.options().end(),
                       [&](const Cardinal& x) { return lt(x, b, fuel); });
  if (a.kind() == K::Between) return lt(a.hi(), b, fuel);
  if (b.kind() == K::Max)
    return std::any_of(b.options().begin(), b.options().end(),
                       [&](const Cardinal& y) { return lt(a, y, fuel); });
  if (b.kind() == K::Between) return lt(a, b.lo(), fuel);

  if (a.is_finite()) return b.is_infinite() || a.value() < b.value();
  if (b.is_finite()) return false;
  if (a.kind() == K::Aleph && b.kind() == K::Aleph) return a.index() < b.index();
  for (const Bound& l : lower_bounds(b))
    if (l.strict ? le(a, l.term, fuel) : lt(a, l.term, fuel)) return true;
  for (const Bound& u : upper_bounds(a, fuel))
    if (u.strict ? le(u.term, b, fuel) : lt(u.term, b, fuel)) return true;
  return false;
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::ZFC ? "zfc" : "gch"; }

std::string to_string(CompareResult r) {
  switch (r) {
    case CompareResult::Less: return "less";
    case CompareResult::Equal: return "equal";
    case CompareResult::Greater: return "greater";
    case CompareResult::Unknown: return "unknown";
  }
  return "unknown";
}

Cardinal Cardinal::finite(Natural n) {
  if (n < 0) throw std::invalid_argument("cardinal cannot be negative");
  Cardinal c;
  c.kind_ = Kind::Finite;
  c.value_ = std::move(n);
  return c;
}

Cardinal Cardinal::aleph(Ordinal index) {
  Cardinal c;
  c.kind_ = Kind::Aleph;
  c.index_ = std::move(index);
  return c;
}

Cardinal Cardinal::powset(Cardinal base) {
  Cardinal c;
  c.kind_ = Kind::PowSet;
  c.children_.push_back(std::move(base));
  return c;
}

Cardinal Cardinal::exp(Cardinal base, Cardinal exponent) {
  Cardinal c;
  c.kind_ = Kind::Exp;
  c.children_.push_back(std::move(base));
  c.children_.push_back(std::move(exponent));
  return c;
}

Cardinal Cardinal::max_of(std::vector<Cardinal> options) {
  if (options.empty()) throw std::invalid_argument("max of no cardinals");
  Cardinal c;
  c.kind_ = Kind::Max;
  c.children_ = std::move(options);
  return c;
}

Cardinal Cardinal::between(Cardinal lo, Cardinal hi) {
  Cardinal c;
  c.kind_ = Kind::Between;
  c.children_.push_back(std::move(lo));
  c.children_.push_back(std::move(hi));
  return c;
}

const Natural& Cardinal::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() on non-finite cardinal");
  return value_;
}

const Ordinal& Cardinal::index() const {
  if (kind_ != Kind::Aleph) throw std::logic_error("index() on non-aleph cardinal");
  return index_;
}

const Cardinal& Cardinal::base() const {
  if (kind_ != Kind::PowSet && kind_ != Kind::Exp) throw std::logic_error("base() without base");
  return children_[0];
}

const Cardinal& Cardinal::exponent() const {
  if (kind_ != Kind::Exp) throw std::logic_error("exponent() on non-exp cardinal");
  return children_[1];
}

std::span<const Cardinal> Cardinal::options() const {
  if (kind_ != Kind::Max) throw std::logic_error("options() on non-max cardinal");
  return children_;
}

const Cardinal& Cardinal::lo() const {
  if (kind_ != Kind::Between) throw std::logic_error("lo() on non-between cardinal");
  return children_[0];
}

const Cardinal& Cardinal::hi() const {
  if (kind_ != Kind::Between) throw std::logic_error("hi() on non-between cardinal");
  return children_[1];
}

std::string Cardinal::to_string() const {
  switch (kind_) {
    case Kind::Finite: return value_.str();
    case Kind::Aleph: return "aleph(" + index_.to_string() + ")";
    case Kind::PowSet: return "2^" + children_[0].to_string();
    case Kind::Exp:
      return "exp(" + children_[0].to_string() + ", " + children_[1].to_string() + ")";
    case Kind::Between:
      return "between(" + children_[0].to_string() + ", " + children_[1].to_string() + ")";
    case Kind::Max: {
      std::string out = "max(";
      for (std::size_t i = 0; i < children_.size(); ++i)
        out += (i ? ", " : "") + children_[i].to_string();
      return out + ")";
    }
  }
  return {};
}

bool operator==(const Cardinal& a, const Cardinal& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Cardinal::Kind::Finite: return a.value_ == b.value_;
    case Cardinal::Kind::Aleph: return a.index_ == b.index_;
    default: return a.children_ == b.children_;
  }
}

bool provably_le(const Cardinal& a, const Cardinal& b) { return le(a, b, kFuel); }
bool provably_lt(const Cardinal& a, const Cardinal& b) { return lt(a, b, kFuel); }

CompareResult compare_normal(const Cardinal& a, const Cardinal& b) {
  if (a == b) return CompareResult::Equal;
  if (provably_lt(a, b)) return CompareResult::Less;
  if (provably_lt(b, a)) return CompareResult::Greater;
  if (provably_le(a, b) && provably_le(b, a)) return CompareResult::Equal;
  return CompareResult::Unknown;
}

bool is_regular_aleph(const Cardinal& c) {
  return c.kind() == Cardinal::Kind::Aleph && classify(c.index()) != OrdinalKind::Limit;
}

bool has_countable_cofinality(const Cardinal& c) {
  return c.kind() == Cardinal::Kind::Aleph && classify(c.index()) == OrdinalKind::Limit;
}

bool konig_applies(const Cardinal& base, const Cardinal& exponent) {
  return has_countable_cofinality(base) && exponent.is_infinite();
}

Cardinal make_max(std::vector<Cardinal> options) {
  std::vector<Cardinal> flat;
  auto push = [&](auto&& self, const Cardinal& c) -> void {
    if (c.kind() == Cardinal::Kind::Max)
      for (const Cardinal& o : c.options()) self(self, o);
    else
      flat.push_back(c);
  };
  for (const Cardinal& c : options) push(push, c);
  if (flat.empty()) throw std::invalid_argument("max of no cardinals");

  std::vector<std::pair<std::string, Cardinal>> keyed;
  for (Cardinal& c : flat) keyed.emplace_back(c.to_string(), std::move(c));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());

  std::vector<Cardinal> kept;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < keyed.size() && !dominated; ++j) {
      if (i == j || !provably_le(keyed[i].second, keyed[j].second)) continue;
      // Provably equal pairs keep the one that sorts first.
      dominated = !provably_le(keyed[j].second, keyed[i].second) || j < i;
    }
    if (!dominated) kept.push_back(keyed[i].second);
  }
  if (kept.empty()) kept.push_back(keyed.front().second);
  if (kept.size() == 1) return kept.front();
  return Cardinal::max_of(std::move(kept));
}

bool is_normal(const Cardinal& c, Mode mode) {
  using K = Cardinal::Kind;
  auto plain = [](const Cardinal& x) { return x.kind() != K::Max && x.kind() != K::Between; };
  switch (c.kind()) {
    case K::Finite:
    case K::Aleph:
      return true;
    case K::PowSet:
      return mode == Mode::ZFC && is_normal(c.base(), mode) && c.base().is_infinite() &&
             plain(c.base());
    case K::Exp:
      return mode == Mode::ZFC && c.base().kind() == K::Aleph && is_normal(c.exponent(), mode) &&
             c.exponent().is_infinite() && plain(c.exponent()) &&
             !provably_le(c.base(), Cardinal::powset(c.exponent()));
    case K::Max: {
      if (c.options().size() < 2) return false;
      for (const Cardinal& o : c.options())
        if (!plain(o) || !is_normal(o, mode)) return false;
      return make_max({c.options().begin(), c.options().end()}) == c;
    }
    case K::Between:
      return c.lo().kind() != K::Between && c.hi().kind() != K::Between &&
             is_normal(c.lo(), mode) && is_normal(c.hi(), mode) &&
             !provably_le(c.hi(), c.lo());
  }
  return false;
}

std::optional<Bounds> bounds_of(const Cardinal& c) {
  if (c.kind() == Cardinal::Kind::Between) return Bounds{c.lo(), false, c.hi(), false};
  if (c.kind() != Cardinal::Kind::Exp) return std::nullopt;
  const Cardinal& b = c.base();
  const Cardinal& e = c.exponent();
  Cardinal upper = provably_le(e, b) ? Cardinal::powset(b)
                                     : make_max({Cardinal::powset(e), Cardinal::powset(b)});
  return Bounds{b, konig_applies(b, e), std::move(upper), false};
}

}  // namespace cardalg
