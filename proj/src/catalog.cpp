#include "sylow/catalog.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sylow/arith.hpp"
#include "sylow/errors.hpp"

namespace sylow {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

// f mod g over GF(r); g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t r) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg && !f.empty()) {
    const std::uint32_t lead = f.back();
    if (lead != 0) {
      const std::size_t shift = f.size() - 1 - dg;
      for (std::size_t i = 0; i <= dg; ++i)
        f[shift + i] = (f[shift + i] + (r - lead) * g[i]) % r;
    }
    f.pop_back();
  }
  return f;
}

bool poly_irreducible(const Poly& f, std::uint32_t r) {
  const unsigned t = static_cast<unsigned>(f.size() - 1);
  if (t <= 1) return true;
  // Trial division by every monic polynomial of degree 1..t/2.
  for (unsigned d = 1; d <= t / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= r;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1);
      std::uint64_t v = c;
      for (unsigned i = 0; i < d; ++i, v /= r) g[i] = static_cast<std::uint32_t>(v % r);
      g[d] = 1;
      Poly rem = poly_mod(f, g, r);
      if (std::all_of(rem.begin(), rem.end(), [](auto x) { return x == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t q) : q_(q) {
  if (q < 2 || q > 1024) throw std::invalid_argument("FiniteField: q must be in [2, 1024]");
  auto [r, t] = prime_power(q);
  r_ = r;
  t_ = t;
  const auto r32 = static_cast<std::uint32_t>(r);

  auto digits = [&](std::uint64_t a) {
    Poly d(t_);
    for (unsigned i = 0; i < t_; ++i, a /= r_) d[i] = static_cast<std::uint32_t>(a % r_);
    return d;
  };
  auto index = [&](const Poly& d) {
    std::uint64_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * r_ + d[i];
    return static_cast<Elt>(a);
  };

  for (std::uint64_t c = 0; c < q_; ++c) {
    Poly f = digits(c);
    f.push_back(1);
    if (poly_irreducible(f, r32)) {
      modulus_ = f;
      break;
    }
  }

  add_.resize(q_ * q_);
  neg_.resize(q_);
  for (std::uint64_t a = 0; a < q_; ++a) {
    const Poly da = digits(a);
    Poly n(t_);
    for (unsigned i = 0; i < t_; ++i) n[i] = (r32 - da[i]) % r32;
    neg_[a] = index(n);
    for (std::uint64_t b = 0; b < q_; ++b) {
      const Poly db = digits(b);
      Poly s(t_);
      for (unsigned i = 0; i < t_; ++i) s[i] = (da[i] + db[i]) % r32;
      add_[a * q_ + b] = index(s);
    }
  }

  auto slow_mul = [&](Elt a, Elt b) {
    const Poly da = digits(a), db = digits(b);
    Poly prod(2 * t_, 0);
    for (unsigned i = 0; i < t_; ++i)
      for (unsigned j = 0; j < t_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % r32;
    Poly rem = poly_mod(prod, modulus_, r32);
    rem.resize(t_, 0);
    return index(rem);
  };

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (Elt g = 1; g < q_; ++g) {
    Elt x = 1;
    std::uint64_t order = 0;
    do {
      x = slow_mul(x, g);
      ++order;
    } while (x != 1);
    if (order != q_ - 1) continue;
    primitive_ = g;
    x = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<Elt>(i);
      x = slow_mul(x, g);
    }
    break;
  }
}

FiniteField::Elt FiniteField::inv(Elt a) const {
  if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elt FiniteField::pow(Elt a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

namespace {

Permutation cycle_perm(std::size_t degree, std::vector<Point> cycle) {
  return Permutation::from_cycles(degree, {std::move(cycle)});
}

std::vector<Point> range(Point from, Point to) {
  std::vector<Point> v;
  for (Point i = from; i < to; ++i) v.push_back(i);
  return v;
}

void check_degree(std::uint64_t n) {
  if (n > 0xffff) throw std::invalid_argument("degree too large");
}

}  // namespace

PermGroup symmetric(unsigned n) {
  check_degree(n);
  if (n < 2) return PermGroup::trivial(n);
  return PermGroup(n, {cycle_perm(n, {0, 1}), cycle_perm(n, range(0, n))});
}

PermGroup alternating(unsigned n) {
  check_degree(n);
  if (n < 3) return PermGroup::trivial(n);
  std::vector<Permutation> gens{cycle_perm(n, {0, 1, 2})};
  if (n > 3) gens.push_back(cycle_perm(n, n % 2 ? range(0, n) : range(1, n)));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic(unsigned n) {
  check_degree(n);
  if (n < 2) return PermGroup::trivial(std::max(1u, n));
  return PermGroup(n, {cycle_perm(n, range(0, n))});
}

PermGroup dihedral(unsigned order) {
  if (order < 2 || order % 2) throw std::invalid_argument("dihedral: order must be even and >= 2");
  const unsigned n = order / 2;
  check_degree(n);
  if (n == 1) return cyclic(2);
  if (n == 2)
    return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  std::vector<std::vector<Point>> reflection;
  for (Point i = 1; i < n - i; ++i) reflection.push_back({i, static_cast<Point>(n - i)});
  return PermGroup(n, {cycle_perm(n, range(0, n)), Permutation::from_cycles(n, reflection)});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t da = a.degree(), db = b.degree(), n = da + db;
  check_degree(n);
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i < da ? g(static_cast<Point>(i)) : static_cast<Point>(i);
    gens.push_back(Permutation::unchecked(std::move(img)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = i < da ? static_cast<Point>(i) : static_cast<Point>(da + g(static_cast<Point>(i - da)));
    gens.push_back(Permutation::unchecked(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

namespace {

// Permutation of the projective line (q + 1 points, infinity = q) from a map on GF(q)
// that fixes infinity.
template <class F>
Permutation affine_line(const FiniteField& f, F map) {
  const std::size_t q = f.q();
  std::vector<Point> img(q + 1);
  for (std::size_t x = 0; x < q; ++x) img[x] = static_cast<Point>(map(static_cast<FiniteField::Elt>(x)));
  img[q] = static_cast<Point>(q);
  return Permutation(std::move(img));
}

Permutation line_inversion(const FiniteField& f) {
  // x -> -1/x, 0 <-> infinity
  const std::size_t q = f.q();
  std::vector<Point> img(q + 1);
  img[0] = static_cast<Point>(q);
  img[q] = 0;
  for (std::size_t x = 1; x < q; ++x) img[x] = static_cast<Point>(f.neg(f.inv(static_cast<FiniteField::Elt>(x))));
  return Permutation(std::move(img));
}

std::vector<Permutation> psl2_generators(const FiniteField& f) {
  std::vector<Permutation> gens;
  const auto w = f.primitive();
  FiniteField::Elt basis = 1;
  for (unsigned i = 0; i < f.degree(); ++i, basis = f.mul(basis, w))
    gens.push_back(affine_line(f, [&](auto x) { return f.add(x, basis); }));
  const auto w2 = f.mul(w, w);
  gens.push_back(affine_line(f, [&](auto x) { return f.mul(w2, x); }));
  gens.push_back(line_inversion(f));
  return gens;
}

}  // namespace

PermGroup agl1(std::uint64_t q) {
  FiniteField f(q);
  std::vector<Permutation> gens;
  std::vector<Point> shift(q), scale(q);
  const auto w = f.primitive();
  FiniteField::Elt basis = 1;
  for (unsigned i = 0; i < f.degree(); ++i, basis = f.mul(basis, w)) {
    for (std::uint64_t x = 0; x < q; ++x) shift[x] = static_cast<Point>(f.add(static_cast<FiniteField::Elt>(x), basis));
    gens.emplace_back(shift);
  }
  for (std::uint64_t x = 0; x < q; ++x) scale[x] = static_cast<Point>(f.mul(w, static_cast<FiniteField::Elt>(x)));
  gens.emplace_back(scale);
  return PermGroup(q, std::move(gens));
}

PermGroup psl2(std::uint64_t q) {
  FiniteField f(q);
  return PermGroup(q + 1, psl2_generators(f));
}

PermGroup pgl2(std::uint64_t q) {
  FiniteField f(q);
  auto gens = psl2_generators(f);
  const auto w = f.primitive();
  gens.push_back(affine_line(f, [&](auto x) { return f.mul(w, x); }));
  return PermGroup(q + 1, std::move(gens));
}

PermGroup psl2_field_extension(std::uint64_t q, unsigned k) {
  FiniteField f(q);
  const unsigned t = f.degree();
  if (k < 2 || t % k) throw std::invalid_argument("psl2_field_extension: need 1 < k dividing t");
  std::uint64_t e = 1;
  for (unsigned i = 0; i < t / k; ++i) e *= f.characteristic();
  auto gens = psl2_generators(f);
  gens.push_back(affine_line(f, [&](auto x) { return f.pow(x, e); }));
  return PermGroup(q + 1, std::move(gens));
}

PermGroup psl(unsigned m, std::uint64_t q) {
  if (m < 2) throw std::invalid_argument("psl: dimension must be >= 2");
  FiniteField f(q);
  std::uint64_t vectors = 1;
  for (unsigned i = 0; i < m; ++i) {
    vectors *= q;
    if (vectors > (1u << 20)) throw std::invalid_argument("psl: too many points");
  }
  // Normalized vectors: first nonzero coordinate (coordinate 0 first) equals 1.
  using Vec = std::vector<FiniteField::Elt>;
  auto decode = [&](std::uint64_t v) {
    Vec x(m);
    for (unsigned i = 0; i < m; ++i, v /= q) x[i] = static_cast<FiniteField::Elt>(v % q);
    return x;
  };
  auto encode = [&](const Vec& x) {
    std::uint64_t v = 0;
    for (unsigned i = m; i-- > 0;) v = v * q + x[i];
    return v;
  };
  auto normalize = [&](Vec x) {
    for (unsigned i = 0; i < m; ++i)
      if (x[i] != 0) {
        const auto s = f.inv(x[i]);
        for (auto& c : x) c = f.mul(s, c);
        break;
      }
    return x;
  };
  std::vector<Vec> points;
  std::map<std::uint64_t, Point> point_of;
  for (std::uint64_t v = 1; v < vectors; ++v) {
    Vec x = decode(v);
    if (normalize(x) != x) continue;
    point_of.emplace(v, static_cast<Point>(points.size()));
    points.push_back(std::move(x));
  }
  check_degree(points.size());

  std::vector<Permutation> gens;
  const auto w = f.primitive();
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) {
      if (i == j) continue;
      FiniteField::Elt a = 1;
      for (unsigned s = 0; s < f.degree(); ++s, a = f.mul(a, w)) {
        std::vector<Point> img(points.size());
        for (std::size_t p = 0; p < points.size(); ++p) {
          Vec x = points[p];
          x[i] = f.add(x[i], f.mul(a, x[j]));
          img[p] = point_of.at(encode(normalize(x)));
        }
        gens.emplace_back(std::move(img));
      }
    }
  return PermGroup(points.size(), std::move(gens));
}

namespace {

PermGroup from_cycle_strings(std::size_t degree, std::initializer_list<const char*> gens) {
  std::vector<Permutation> perms;
  for (const char* g : gens) perms.push_back(parse_cycles(g, degree));
  return PermGroup(degree, std::move(perms));
}

// Standard generators: M11 and M12 as in the usual (1..11) presentations,
// M23 and M24 from the Golay-code description (Conway's generators).
const char* const kM11b = "(3,7,11,8)(4,10,5,6)";
const char* const kM12c = "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)";
const char* const kM23a = "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)";
const char* const kM23b = "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)";
const char* const kM24c = "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)";

}  // namespace

PermGroup mathieu(unsigned n) {
  switch (n) {
    case 11: return from_cycle_strings(11, {"(1,2,3,4,5,6,7,8,9,10,11)", kM11b});
    case 12: return from_cycle_strings(12, {"(1,2,3,4,5,6,7,8,9,10,11)", kM11b, kM12c});
    case 22: {
      // Point stabilizer of M23; the last point is fixed, so drop it.
      const PermGroup m23 = mathieu(23);
      std::vector<Point> prefix{22};
      StabChain chain = StabChain::build(23, m23.generators(), prefix);
      std::vector<Permutation> gens;
      for (const auto& g : chain.levels().at(1).generators) {
        std::vector<Point> img(g.images().begin(), g.images().end() - 1);
        gens.emplace_back(std::move(img));
      }
      return PermGroup(22, std::move(gens));
    }
    case 23: return from_cycle_strings(23, {kM23a, kM23b});
    case 24: return from_cycle_strings(24, {kM23a, kM23b, kM24c});
    default: throw std::invalid_argument("mathieu: n must be 11, 12, 22, 23 or 24");
  }
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec g = product();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return g;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(i_, tok.size()) == tok) {
      i_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::uint64_t number() {
    skip();
    const std::size_t start = i_;
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
      if (v > 1'000'000'000) fail("number too large");
      ++i_;
    }
    if (i_ == start) fail("expected a number");
    return v;
  }

  GroupSpec product() {
    GroupSpec first = factor();
    skip();
    std::vector<GroupSpec> factors{std::move(first)};
    while (accept("x")) factors.push_back(factor());
    if (factors.size() == 1) return std::move(factors.front());
    GroupSpec g;
    g.kind = GroupSpec::Kind::Product;
    g.factors = std::move(factors);
    return g;
  }

  GroupSpec simple(GroupSpec::Kind kind, std::uint64_t n, std::uint64_t m = 0) {
    GroupSpec g;
    g.kind = kind;
    g.n = n;
    g.m = m;
    return g;
  }

  GroupSpec factor() {
    using K = GroupSpec::Kind;
    skip();
    const std::size_t start = i_;
    if (accept("(")) {
      GroupSpec g = product();
      expect(")");
      return g;
    }
    if (accept("AGL1(")) {
      const auto q = number();
      expect(")");
      return simple(K::Affine, q);
    }
    if (accept("PSL2(")) {
      const auto q = number();
      expect(")");
      std::uint64_t k = 0;
      if (accept(":")) k = number();
      return simple(K::PSL2, q, k);
    }
    if (accept("PGL2(")) {
      const auto q = number();
      expect(")");
      return simple(K::PGL2, q);
    }
    if (accept("PSL")) {
      const auto m = number();
      expect("(");
      const auto q = number();
      expect(")");
      return simple(K::PSL, q, m);
    }
    static constexpr std::pair<char, K> letters[] = {{'S', K::Symmetric}, {'A', K::Alternating},
                                                     {'C', K::Cyclic},    {'D', K::Dihedral},
                                                     {'M', K::Mathieu}};
    for (const auto& [c, kind] : letters)
      if (i_ < s_.size() && s_[i_] == c) {
        ++i_;
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
          fail("expected a number");
        return simple(kind, number());
      }
    i_ = start;
    fail("expected a group name");
  }
};

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) { return SpecParser(text).parse(); }

std::string GroupSpec::to_string() const {
  const std::string n_str = std::to_string(n);
  switch (kind) {
    case Kind::Symmetric: return "S" + n_str;
    case Kind::Alternating: return "A" + n_str;
    case Kind::Cyclic: return "C" + n_str;
    case Kind::Dihedral: return "D" + n_str;
    case Kind::Mathieu: return "M" + n_str;
    case Kind::Affine: return "AGL1(" + n_str + ")";
    case Kind::PSL2: return "PSL2(" + n_str + ")" + (m ? ":" + std::to_string(m) : "");
    case Kind::PGL2: return "PGL2(" + n_str + ")";
    case Kind::PSL: return "PSL" + std::to_string(m) + "(" + n_str + ")";
    case Kind::Product: {
      std::string out;
      for (const auto& f : factors) {
        if (!out.empty()) out += " x ";
        out += f.kind == Kind::Product ? "(" + f.to_string() + ")" : f.to_string();
      }
      return out;
    }
  }
  return "?";
}

PermGroup GroupSpec::build() const {
  auto small = [&](std::uint64_t limit) {
    if (n > limit) throw std::invalid_argument(to_string() + ": parameter too large");
    return static_cast<unsigned>(n);
  };
  switch (kind) {
    case Kind::Symmetric: return symmetric(small(64));
    case Kind::Alternating: return alternating(small(64));
    case Kind::Cyclic: return cyclic(small(0xffff));
    case Kind::Dihedral: return dihedral(small(0x1fffe));
    case Kind::Mathieu: return mathieu(small(24));
    case Kind::Affine: return agl1(n);
    case Kind::PSL2: return m ? psl2_field_extension(n, static_cast<unsigned>(m)) : psl2(n);
    case Kind::PGL2: return pgl2(n);
    case Kind::PSL: return psl(static_cast<unsigned>(m), n);
    case Kind::Product: {
      PermGroup g = factors.front().build();
      for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i].build());
      return g;
    }
  }
  throw std::logic_error("GroupSpec::build: bad kind");
}

}  // namespace sylow
