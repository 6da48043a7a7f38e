#include <algorithm>
#include <numeric>
#include <sstream>

#include "cardalg/finring.hpp"
#include "cardalg/parse_util.hpp"

namespace cardalg {

namespace {

constexpr std::size_t kHardCap = 65535;  // element indices are stored as uint16

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_cap(const Natural& order, std::size_t cap, const std::string& what) {
  if (order > Natural(std::min(cap, kHardCap)))
    throw CapExceeded(what + ": order " + order.str() + " exceeds cap " + std::to_string(std::min(cap, kHardCap)));
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

std::string render_poly(const std::vector<std::uint32_t>& c) {
  std::string s;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!s.empty()) s += "+";
    if (k == 0) {
      s += std::to_string(c[k]);
      continue;
    }
    if (c[k] != 1) s += std::to_string(c[k]) + "*";
    s += "x";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

// Mixed-radix digits, first position most significant.
std::vector<std::uint32_t> to_digits(std::size_t x, const std::vector<std::uint32_t>& radix) {
  std::vector<std::uint32_t> d(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    d[i] = static_cast<std::uint32_t>(x % radix[i]);
    x /= radix[i];
  }
  return d;
}

std::size_t from_digits_impl(const std::vector<std::uint32_t>& d, const std::vector<std::uint32_t>& radix) {
  std::size_t x = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) x = x * radix[i] + d[i];
  return x;
}

}  // namespace

// ---------------------------------------------------------------- MonoidTable

MonoidTable::MonoidTable(std::string name, std::size_t identity, std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), identity_(identity), table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("monoid " + name_ + ": empty table");
  if (identity_ >= n) throw std::invalid_argument("monoid " + name_ + ": identity out of range");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("monoid " + name_ + ": table is not square");
    for (std::size_t v : row)
      if (v >= n) throw std::invalid_argument("monoid " + name_ + ": entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (op(identity_, a) != a || op(a, identity_) != a)
      throw std::invalid_argument("monoid " + name_ + ": identity law fails at " + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          throw std::invalid_argument("monoid " + name_ + ": not associative at (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ", " + std::to_string(c) + ")");
}

MonoidTable MonoidTable::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("C0 is not a monoid");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return MonoidTable("C" + std::to_string(n), 0, std::move(t));
}

MonoidTable MonoidTable::truncated(std::size_t n) {
  if (n == 0) throw std::invalid_argument("N0 is not a monoid");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = std::min(a + b, n - 1);
  return MonoidTable("N" + std::to_string(n), 0, std::move(t));
}

MonoidTable MonoidTable::left_zero_two() {
  return MonoidTable("LZ2", 0, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
}

MonoidTable MonoidTable::parse(std::string_view text) {
  auto number = [&](std::size_t skip) -> std::size_t {
    const std::string digits(text.substr(skip));
    if (digits.empty() || digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("bad monoid size in '" + std::string(text) + "'");
    return std::stoul(digits);
  };
  if (text == "LZ2") return left_zero_two();
  if (text.starts_with("C")) return cyclic(number(1));
  if (text.starts_with("N")) return truncated(number(1));
  throw std::invalid_argument("unknown monoid '" + std::string(text) + "' (expected Cn, Nn or LZ2)");
}

bool MonoidTable::is_commutative() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

// ------------------------------------------------------------------ RingSpec

std::size_t ModuleSpec::size() const {
  std::size_t s = 1;
  for (auto d : orders) s *= d;
  return s;
}

RingSpec RingSpec::zmod(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("Z/n needs n >= 2");
  RingSpec s;
  s.kind = Kind::Zmod;
  s.n = n;
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  if (factors.empty()) throw std::invalid_argument("prod needs at least one factor");
  for (const RingSpec& f : factors)
    if (!f.is_finite()) throw std::invalid_argument("prod factors must be finite");
  RingSpec s;
  s.kind = Kind::Product;
  s.parts = std::move(factors);
  return s;
}

RingSpec RingSpec::poly_quot(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("GF(" + std::to_string(p) + "): not a prime");
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  if (modulus.back() != 1) throw std::invalid_argument("modulus " + render_poly(modulus) + " is not monic");
  RingSpec s;
  s.kind = Kind::PolyQuot;
  s.n = p;
  s.modulus = std::move(modulus);
  return s;
}

RingSpec RingSpec::idealize(RingSpec base, ModuleSpec module) {
  if (!base.is_finite()) throw std::invalid_argument("idealize needs a finite base ring");
  for (auto d : module.orders)
    if (d < 2) throw std::invalid_argument("module factor orders must be >= 2");
  RingSpec s;
  s.kind = Kind::Idealize;
  s.parts = {std::move(base)};
  s.module = std::move(module);
  return s;
}

RingSpec RingSpec::monoid_ring(RingSpec base, MonoidTable monoid) {
  if (!base.is_finite()) throw std::invalid_argument("monoidring needs a finite base ring");
  RingSpec s;
  s.kind = Kind::MonoidRing;
  s.parts = {std::move(base)};
  s.monoid = std::move(monoid);
  return s;
}

RingSpec RingSpec::integers() {
  RingSpec s;
  s.kind = Kind::BuiltinInt;
  return s;
}

RingSpec RingSpec::poly_over_fq(std::uint32_t q) {
  if (!is_prime(q)) throw std::invalid_argument("GF(" + std::to_string(q) + ")[x]: only prime fields are built in");
  RingSpec s;
  s.kind = Kind::BuiltinPolyOverFq;
  s.n = q;
  return s;
}

bool RingSpec::is_finite() const { return kind != Kind::BuiltinInt && kind != Kind::BuiltinPolyOverFq; }

Natural RingSpec::order() const {
  switch (kind) {
    case Kind::Zmod: return n;
    case Kind::Product: {
      Natural o = 1;
      for (const RingSpec& f : parts) o *= f.order();
      return o;
    }
    case Kind::PolyQuot: return checked_pow(n, modulus.size() - 1);
    case Kind::Idealize: return parts[0].order() * module.size();
    case Kind::MonoidRing: return checked_pow(parts[0].order(), monoid->size());
    default: throw std::logic_error(to_string() + " is infinite");
  }
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::Zmod: return "Z/" + std::to_string(n);
    case Kind::Product: {
      std::vector<std::string> xs;
      for (const RingSpec& f : parts) xs.push_back(f.to_string());
      return "prod(" + join(xs) + ")";
    }
    case Kind::PolyQuot: return "GF(" + std::to_string(n) + ")[x]/(" + render_poly(modulus) + ")";
    case Kind::Idealize: {
      std::string s = "idealize(" + parts[0].to_string() + ", [";
      for (std::size_t i = 0; i < module.orders.size(); ++i) s += (i ? "," : "") + std::to_string(module.orders[i]);
      return s + (module.action ? "], action)" : "])");
    }
    case Kind::MonoidRing: return "monoidring(" + parts[0].to_string() + ", " + monoid->name() + ")";
    case Kind::BuiltinInt: return "ZZ";
    case Kind::BuiltinPolyOverFq: return "GF(" + std::to_string(n) + ")[x]";
  }
  return {};
}

namespace {

class RingParser {
 public:
  explicit RingParser(std::string_view text) : cur_(text) {}

  RingSpec parse() {
    RingSpec r = ring();
    cur_.expect_end();
    return r;
  }

 private:
  static constexpr std::uint64_t kMaxSmall = 1u << 20;

  RingSpec ring() {
    cur_.skip_space();
    const std::size_t start = cur_.offset();
    std::string id;
    if (!cur_.identifier(id)) cur_.fail({"Z", "ZZ", "GF", "prod", "idealize", "monoidring"}, "expected a ring");
    try {
      if (id == "ZZ") return RingSpec::integers();
      if (id == "Z") {
        cur_.expect("/");
        return RingSpec::zmod(static_cast<std::uint32_t>(cur_.small_natural(kMaxSmall)));
      }
      if (id == "GF") return gf();
      if (id == "prod") {
        cur_.expect("(");
        std::vector<RingSpec> fs{ring()};
        while (cur_.accept(",")) fs.push_back(ring());
        cur_.expect(")");
        return RingSpec::product(std::move(fs));
      }
      if (id == "idealize") {
        cur_.expect("(");
        RingSpec base = ring();
        cur_.expect(",");
        cur_.expect("[");
        ModuleSpec m;
        if (!cur_.accept("]")) {
          do m.orders.push_back(static_cast<std::uint32_t>(cur_.small_natural(kMaxSmall)));
          while (cur_.accept(","));
          cur_.expect("]");
        }
        cur_.expect(")");
        return RingSpec::idealize(std::move(base), std::move(m));
      }
      if (id == "monoidring") {
        cur_.expect("(");
        RingSpec base = ring();
        cur_.expect(",");
        cur_.skip_space();
        const std::size_t at = cur_.offset();
        std::string name;
        if (!cur_.identifier(name)) cur_.fail({"Cn", "Nn", "LZ2"}, "expected a monoid");
        MonoidTable m = [&] {
          try {
            return MonoidTable::parse(name);
          } catch (const std::invalid_argument& e) {
            cur_.fail_at(at, {"Cn", "Nn", "LZ2"}, e.what());
          }
        }();
        cur_.expect(")");
        return RingSpec::monoid_ring(std::move(base), std::move(m));
      }
    } catch (const std::invalid_argument& e) {
      cur_.fail_at(start, {}, e.what());
    }
    cur_.fail_at(start, {"Z", "ZZ", "GF", "prod", "idealize", "monoidring"}, "unknown ring constructor '" + id + "'");
  }

  RingSpec gf() {
    cur_.expect("(");
    const auto p = static_cast<std::uint32_t>(cur_.small_natural(kMaxSmall));
    cur_.expect(")");
    cur_.expect("[");
    cur_.expect("x");
    cur_.expect("]");
    if (!cur_.accept("/")) return RingSpec::poly_over_fq(p);
    cur_.expect("(");
    std::vector<std::int64_t> coeffs;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (cur_.accept("-"))
        sign = -1;
      else if (!first && !cur_.accept("+"))
        break;
      first = false;
      auto [c, k] = term();
      if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
      coeffs[k] += sign * static_cast<std::int64_t>(c);
    }
    cur_.expect(")");
    std::vector<std::uint32_t> mod;
    for (auto c : coeffs) mod.push_back(static_cast<std::uint32_t>(((c % p) + p) % p));
    return RingSpec::poly_quot(p, std::move(mod));
  }

  // coefficient, degree
  std::pair<std::uint64_t, std::size_t> term() {
    std::uint64_t c = 1;
    bool has_coeff = false;
    if (cur_.peek_digit()) {
      c = cur_.small_natural(kMaxSmall);
      has_coeff = true;
      cur_.accept("*");
    }
    if (!cur_.accept("x")) {
      if (!has_coeff) cur_.fail({"x", "NAT"}, "expected a polynomial term");
      return {c, 0};
    }
    std::size_t k = 1;
    if (cur_.accept("^")) k = static_cast<std::size_t>(cur_.small_natural(64));
    return {c, k};
  }

  Cursor cur_;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text) { return RingParser(text).parse(); }

// ---------------------------------------------------------------- FiniteRing

FiniteRing::FiniteRing(std::string name, std::vector<std::string> labels, std::vector<std::uint16_t> add,
                       std::vector<std::uint16_t> mul, Elem zero, Elem one, bool verify)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      add_(std::move(add)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one) {
  const std::size_t n = labels_.size();
  if (n < 2) throw std::invalid_argument(name_ + ": a ring with 1 != 0 has at least two elements");
  if (n > kHardCap) throw CapExceeded(name_ + ": too many elements");
  if (add_.size() != n * n || mul_.size() != n * n) throw std::invalid_argument(name_ + ": table size mismatch");
  if (zero_ >= n || one_ >= n || zero_ == one_) throw std::invalid_argument(name_ + ": bad zero/one");
  for (std::size_t i = 0; i < n * n; ++i)
    if (add_[i] >= n || mul_[i] >= n) throw std::invalid_argument(name_ + ": table entry out of range");
  neg_.assign(n, zero_);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b)
      if (this->add(a, b) == zero_) {
        neg_[a] = b;
        found = true;
      }
    if (!found) throw std::invalid_argument(name_ + ": element " + labels_[a] + " has no additive inverse");
  }
  if (verify)
    if (auto why = axiom_violation()) throw std::invalid_argument(name_ + ": " + *why);
}

std::optional<Elem> FiniteRing::find(std::string_view label) const {
  for (Elem a = 0; a < order(); ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

std::optional<std::string> FiniteRing::axiom_violation() const {
  const Elem n = static_cast<Elem>(order());
  auto at = [&](Elem a, Elem b, Elem c) {
    return " at (" + labels_[a] + ", " + labels_[b] + ", " + labels_[c] + ")";
  };
  for (Elem a = 0; a < n; ++a) {
    if (add(a, zero_) != a) return "0 is not an additive identity for " + labels_[a];
    if (mul(a, one_) != a) return "1 is not a multiplicative identity for " + labels_[a];
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) return "addition not commutative" + at(a, b, b);
      if (mul(a, b) != mul(b, a)) return "multiplication not commutative" + at(a, b, b);
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = add(a, b), mab = mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (add(ab, c) != add(a, add(b, c))) return "addition not associative" + at(a, b, c);
        if (mul(mab, c) != mul(a, mul(b, c))) return "multiplication not associative" + at(a, b, c);
        if (mul(a, add(b, c)) != add(mab, mul(a, c))) return "distributivity fails" + at(a, b, c);
      }
    }
  return std::nullopt;
}

// -------------------------------------------------------------- construction

namespace {

FiniteRing build_zmod(std::uint32_t n, const std::string& name) {
  std::vector<std::string> labels(n);
  std::vector<std::uint16_t> add(std::size_t{n} * n), mul(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::uint32_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
      mul[a * n + b] = static_cast<std::uint16_t>((std::uint64_t{a} * b) % n);
    }
  }
  return FiniteRing(name, std::move(labels), std::move(add), std::move(mul), 0, 1, false);
}

FiniteRing build_product(const std::vector<FiniteRing>& fs, const std::string& name, bool verify) {
  std::vector<std::uint32_t> radix;
  for (const FiniteRing& f : fs) radix.push_back(static_cast<std::uint32_t>(f.order()));
  std::size_t n = 1;
  for (auto r : radix) n *= r;
  std::vector<std::vector<std::uint32_t>> digits(n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    digits[x] = to_digits(x, radix);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < fs.size(); ++i) parts.push_back(fs[i].label(digits[x][i]));
    labels[x] = "(" + join(parts) + ")";
  }
  std::vector<std::uint16_t> add(n * n), mul(n * n);
  std::vector<std::uint32_t> s(fs.size()), p(fs.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < fs.size(); ++i) {
        s[i] = fs[i].add(digits[a][i], digits[b][i]);
        p[i] = fs[i].mul(digits[a][i], digits[b][i]);
      }
      add[a * n + b] = static_cast<std::uint16_t>(from_digits_impl(s, radix));
      mul[a * n + b] = static_cast<std::uint16_t>(from_digits_impl(p, radix));
    }
  std::vector<std::uint32_t> z(fs.size()), o(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    z[i] = fs[i].zero();
    o[i] = fs[i].one();
  }
  return FiniteRing(name, std::move(labels), std::move(add), std::move(mul),
                    static_cast<Elem>(from_digits_impl(z, radix)), static_cast<Elem>(from_digits_impl(o, radix)),
                    verify);
}

FiniteRing build_poly_quot(std::uint32_t p, const std::vector<std::uint32_t>& modulus, const std::string& name,
                           bool verify) {
  const std::size_t d = modulus.size() - 1;
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) n *= p;
  // coefficient vectors, index = sum c_i p^i
  std::vector<std::vector<std::uint32_t>> coeff(n, std::vector<std::uint32_t>(d));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = x;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < d; ++i) {
      coeff[x][i] = static_cast<std::uint32_t>(y % p);
      y /= p;
      parts.push_back(std::to_string(coeff[x][i]));
    }
    labels[x] = "[" + join(parts) + "]";
  }
  auto index = [&](const std::vector<std::uint32_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * p + c[i];
    return x;
  };
  std::vector<std::uint16_t> add(n * n), mul(n * n);
  std::vector<std::uint32_t> s(d);
  std::vector<std::uint64_t> prod(2 * d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < d; ++i) s[i] = (coeff[a][i] + coeff[b][i]) % p;
      add[a * n + b] = static_cast<std::uint16_t>(index(s));
      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{coeff[a][i]} * coeff[b][j]) % p;
      // reduce by the monic modulus from the top
      for (std::size_t k = 2 * d - 1; k >= d; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - c) * modulus[i]) % p;
      }
      for (std::size_t i = 0; i < d; ++i) s[i] = static_cast<std::uint32_t>(prod[i]);
      mul[a * n + b] = static_cast<std::uint16_t>(index(s));
    }
  return FiniteRing(name, std::move(labels), std::move(add), std::move(mul), 0, 1, verify);
}

}  // namespace

FiniteRing build_finite(const RingSpec& spec, const BuildOptions& options) {
  if (!spec.is_finite()) throw std::invalid_argument(spec.to_string() + " is not a finite ring");
  const std::string name = spec.to_string();
  check_cap(spec.order(), options.cap, name);
  switch (spec.kind) {
    case RingSpec::Kind::Zmod: return build_zmod(spec.n, name);
    case RingSpec::Kind::Product: {
      std::vector<FiniteRing> fs;
      for (const RingSpec& f : spec.parts) fs.push_back(build_finite(f, options));
      return build_product(fs, name, options.verify);
    }
    case RingSpec::Kind::PolyQuot: return build_poly_quot(spec.n, spec.modulus, name, options.verify);
    case RingSpec::Kind::Idealize: {
      FiniteRing base = build_finite(spec.parts[0], options);
      FiniteModule m(base, spec.parts[0], spec.module);
      return idealize(base, m, name, options.verify, options.cap);
    }
    case RingSpec::Kind::MonoidRing: {
      FiniteRing base = build_finite(spec.parts[0], options);
      return monoid_ring(base, *spec.monoid, name, options.verify, options.cap);
    }
    default: break;
  }
  throw std::logic_error("unreachable ring kind");
}

RingInstance ring_build(const RingSpec& spec, const BuildOptions& options) {
  RingInstance r{spec, std::nullopt, std::nullopt};
  if (spec.kind == RingSpec::Kind::BuiltinInt)
    r.effective = EffectiveRing::integers();
  else if (spec.kind == RingSpec::Kind::BuiltinPolyOverFq)
    r.effective = EffectiveRing::poly_over_fq(spec.n);
  else
    r.finite = build_finite(spec, options);
  return r;
}

// -------------------------------------------------------------- FiniteModule

FiniteModule::FiniteModule(const FiniteRing& base, const RingSpec& base_spec, ModuleSpec spec)
    : spec_(std::move(spec)), size_(spec_.size()) {
  const std::size_t n = base.order();
  if (spec_.action) {
    action_ = *spec_.action;
    if (action_.size() != n) throw std::invalid_argument("action table needs one row per ring element");
    for (const auto& row : action_) {
      if (row.size() != size_) throw std::invalid_argument("action row length must equal the module size");
      for (Elem v : row)
        if (v >= size_) throw std::invalid_argument("action entry out of range");
    }
  } else {
    if (base_spec.kind != RingSpec::Kind::Zmod)
      throw std::invalid_argument("the default module action needs a base ring Z/n; give an action table");
    for (auto d : spec_.orders)
      if (base_spec.n % d != 0)
        throw std::invalid_argument("Z/" + std::to_string(d) + " is not a Z/" + std::to_string(base_spec.n) +
                                    "-module");
    action_.assign(n, std::vector<Elem>(size_));
    for (Elem r = 0; r < n; ++r)
      for (Elem x = 0; x < size_; ++x) {
        auto d = digits(x);
        for (std::size_t i = 0; i < d.size(); ++i)
          d[i] = static_cast<std::uint32_t>((std::uint64_t{r} * d[i]) % spec_.orders[i]);
        action_[r][x] = from_digits(d);
      }
  }
  for (Elem x = 0; x < size_; ++x)
    if (act(base.one(), x) != x) throw std::invalid_argument("action is not unital");
  for (Elem r = 0; r < n; ++r)
    for (Elem s = 0; s < n; ++s)
      for (Elem x = 0; x < size_; ++x) {
        if (act(base.add(r, s), x) != add(act(r, x), act(s, x)))
          throw std::invalid_argument("action is not additive in the ring argument");
        if (act(base.mul(r, s), x) != act(r, act(s, x))) throw std::invalid_argument("action is not associative");
      }
  for (Elem r = 0; r < n; ++r)
    for (Elem x = 0; x < size_; ++x)
      for (Elem y = 0; y < size_; ++y)
        if (act(r, add(x, y)) != add(act(r, x), act(r, y)))
          throw std::invalid_argument("action is not additive in the module argument");
}

std::vector<std::uint32_t> FiniteModule::digits(Elem x) const { return to_digits(x, spec_.orders); }

Elem FiniteModule::from_digits(const std::vector<std::uint32_t>& d) const {
  return static_cast<Elem>(from_digits_impl(d, spec_.orders));
}

Elem FiniteModule::add(Elem x, Elem y) const {
  auto a = digits(x), b = digits(y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % spec_.orders[i];
  return from_digits(a);
}

std::string FiniteModule::label(Elem x) const {
  const auto d = digits(x);
  if (d.size() == 1) return std::to_string(d[0]);
  std::vector<std::string> parts;
  for (auto v : d) parts.push_back(std::to_string(v));
  return "(" + join(parts) + ")";
}

FiniteRing idealize(const FiniteRing& base, const FiniteModule& m, std::string name, bool verify, std::size_t cap) {
  const std::size_t b = base.order(), k = m.size(), n = b * k;
  check_cap(n, cap, name);
  std::vector<std::string> labels(n);
  for (Elem r = 0; r < b; ++r)
    for (Elem x = 0; x < k; ++x) labels[r * k + x] = "(" + base.label(r) + ", " + m.label(x) + ")";
  std::vector<Elem> madd(k * k);
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y) madd[x * k + y] = m.add(x, y);
  std::vector<std::uint16_t> add(n * n), mul(n * n);
  for (Elem r = 0; r < b; ++r)
    for (Elem x = 0; x < k; ++x)
      for (Elem s = 0; s < b; ++s)
        for (Elem y = 0; y < k; ++y) {
          const std::size_t i = (r * k + x) * n + (s * k + y);
          add[i] = static_cast<std::uint16_t>(base.add(r, s) * k + madd[x * k + y]);
          mul[i] = static_cast<std::uint16_t>(base.mul(r, s) * k + madd[m.act(r, y) * k + m.act(s, x)]);
        }
  return FiniteRing(std::move(name), std::move(labels), std::move(add), std::move(mul), base.zero() * k,
                    base.one() * k, verify);
}

FiniteRing monoid_ring(const FiniteRing& base, const MonoidTable& m, std::string name, bool verify, std::size_t cap) {
  if (!m.is_commutative())
    throw std::invalid_argument("monoid " + m.name() +
                                " is not commutative; only commutative monoid rings are supported");
  const std::size_t b = base.order(), k = m.size();
  check_cap(checked_pow(b, k), cap, name);
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= b;
  // f(m_i) is digit i in base |base|, least significant first
  std::vector<std::vector<Elem>> f(n, std::vector<Elem>(k));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = x;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < k; ++i) {
      f[x][i] = static_cast<Elem>(y % b);
      y /= b;
      parts.push_back(base.label(f[x][i]));
    }
    labels[x] = "[" + join(parts) + "]";
  }
  auto index = [&](const std::vector<Elem>& g) {
    std::size_t x = 0;
    for (std::size_t i = k; i-- > 0;) x = x * b + g[i];
    return x;
  };
  std::vector<std::uint16_t> add(n * n), mul(n * n);
  std::vector<Elem> g(k);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < k; ++i) g[i] = base.add(f[x][i], f[y][i]);
      add[x * n + y] = static_cast<std::uint16_t>(index(g));
      std::fill(g.begin(), g.end(), base.zero());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          const std::size_t t = m.op(i, j);
          g[t] = base.add(g[t], base.mul(f[x][i], f[y][j]));
        }
      mul[x * n + y] = static_cast<std::uint16_t>(index(g));
    }
  std::vector<Elem> zero(k, base.zero()), one(k, base.zero());
  one[m.identity()] = base.one();
  return FiniteRing(std::move(name), std::move(labels), std::move(add), std::move(mul),
                    static_cast<Elem>(index(zero)), static_cast<Elem>(index(one)), verify);
}

// ------------------------------------------------------------- EffectiveRing

EffectiveRing EffectiveRing::poly_over_fq(std::uint32_t q) {
  if (!is_prime(q)) throw std::invalid_argument("GF(" + std::to_string(q) + ")[x]: only prime fields are built in");
  return EffectiveRing(Kind::PolyOverFq, q);
}

std::string EffectiveRing::name() const {
  return kind_ == Kind::Integers ? "ZZ" : "GF(" + std::to_string(q_) + ")[x]";
}

EffectiveRing::Element EffectiveRing::normalize(Element a) const {
  if (kind_ == Kind::Integers) {
    if (a.size() > 1) throw std::invalid_argument("an integer has a single coefficient");
    if (a.empty()) a.push_back(0);
    return a;
  }
  for (Natural& c : a) {
    c %= q_;
    if (c < 0) c += q_;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool EffectiveRing::is_zero(const Element& a) const {
  const Element n = normalize(a);
  return kind_ == Kind::Integers ? n[0] == 0 : n.empty();
}

bool EffectiveRing::is_unit(const Element& a) const {
  const Element n = normalize(a);
  if (kind_ == Kind::Integers) return n[0] == 1 || n[0] == -1;
  return n.size() == 1;
}

bool EffectiveRing::is_zero_divisor(const Element& a) const { return is_zero(a); }

EffectiveRing::Element EffectiveRing::mul(const Element& a, const Element& b) const {
  const Element x = normalize(a), y = normalize(b);
  if (kind_ == Kind::Integers) return {x[0] * y[0]};
  if (x.empty() || y.empty()) return {};
  Element p(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) p[i + j] += x[i] * y[j];
  return normalize(std::move(p));
}

std::string EffectiveRing::render(const Element& a) const {
  const Element n = normalize(a);
  if (kind_ == Kind::Integers) return n[0].str();
  std::vector<std::uint32_t> c;
  for (const Natural& v : n) c.push_back(v.convert_to<std::uint32_t>());
  return render_poly(c);
}

EffectiveRing::Element EffectiveRing::nth(std::size_t i) const {
  if (kind_ == Kind::Integers) {
    if (i == 0) return {0};
    const Natural m = (i + 1) / 2;
    return {i % 2 ? m : Natural(-m)};
  }
  Element e;
  for (; i > 0; i /= q_) e.push_back(Natural(i % q_));
  return normalize(std::move(e));
}

EffectiveRing::Element EffectiveRing::find_non_unit_non_zero_divisor() const {
  for (std::size_t i = 0;; ++i) {
    Element e = nth(i);
    if (!is_zero_divisor(e) && !is_unit(e)) return e;
  }
}

std::vector<EffectiveRing::Element> EffectiveRing::sample_primes() const {
  if (kind_ == Kind::Integers) return {{2}, {3}, {5}, {7}};
  std::vector<Element> out{{0, 1}, {1, 1}};
  for (std::uint32_t b = 0; b < q_; ++b)
    for (std::uint32_t c = 0; c < q_; ++c) {
      bool has_root = false;
      for (std::uint64_t t = 0; t < q_ && !has_root; ++t) has_root = (t * t + b * t + c) % q_ == 0;
      if (!has_root) {
        out.push_back({c, b, 1});
        return out;
      }
    }
  return out;
}

}  // namespace cardalg
