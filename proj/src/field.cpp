#include "versal/field.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <sstream>

namespace versal {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 mod_pow(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

u64 mod_inverse(u64 a, u64 p) {
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(p), new_r = static_cast<i64>(a);
  while (new_r != 0) {
    i64 quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (t < 0) t += static_cast<i64>(p);
  return static_cast<u64>(t);
}

int poly_degree(u64 a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }

u64 poly_mod(u64 a, u64 b) {
  int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) a ^= b << (da - db);
  return a;
}

bool binary_irreducible(unsigned degree, u64 modulus) {
  if (poly_degree(modulus) != static_cast<int>(degree)) return false;
  for (u64 d = 2; poly_degree(d) <= static_cast<int>(degree / 2); ++d) {
    if (poly_mod(modulus, d) == 0) return false;
  }
  return true;
}

u64 gf2_mul(u64 a, u64 b, unsigned degree, u64 modulus) {
  u64 r = 0;
  const u64 top = u64{1} << degree;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return r;
}

// Tonelli-Shanks; x must be a nonzero quadratic residue mod the odd prime p.
u64 tonelli_shanks(u64 x, u64 p) {
  if (p % 4 == 3) return mod_pow(x, (p + 1) / 4, p);
  u64 q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s;
  u64 c = mod_pow(z, q, p);
  u64 t = mod_pow(x, q, p);
  u64 r = mod_pow(x, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    for (u64 tt = t; tt != 1; tt = tt * tt % p) ++i;
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view text, std::string_view literal) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidParams("malformed integer literal '" + std::string(literal) + "'");
  }
  std::string normalized(text);
  if (normalized.front() == '+') normalized.erase(0, 1);
  return mpz_class(normalized, 10);
}

mpq_class parse_fraction(std::string_view literal) {
  auto slash = literal.find('/');
  mpz_class num = parse_integer(literal.substr(0, slash), literal);
  mpz_class den = 1;
  if (slash != std::string_view::npos) den = parse_integer(literal.substr(slash + 1), literal);
  if (den == 0) throw InvalidParams("zero denominator in literal '" + std::string(literal) + "'");
  mpq_class value(num, den);
  value.canonicalize();
  return value;
}

u64 parse_hex(std::string_view text, std::string_view literal) {
  text = trim(text);
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  u64 value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidParams("malformed hex literal '" + std::string(literal) + "'");
  }
  return value;
}

u64 reduce_mod_p(const mpz_class& value, u64 p) {
  mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::prime(u64 p) {
  if (p >= kMaxPrime) throw InvalidParams("prime fields are limited to p < 2^31");
  if (!is_prime_u64(p)) throw InvalidParams(std::to_string(p) + " is not prime");
  return Field(Kind::prime, p, 1, 0);
}

Field Field::binary(unsigned degree, u64 modulus) {
  if (degree == 0 || degree > kMaxBinaryDegree) {
    throw InvalidParams("binary field degree must lie in [1, 20]");
  }
  if (!binary_irreducible(degree, modulus)) {
    std::ostringstream msg;
    msg << "modulus 0x" << std::hex << modulus << " is not an irreducible polynomial of degree " << std::dec
        << degree;
    throw InvalidParams(msg.str());
  }
  return Field(Kind::binary, 2, degree, modulus);
}

Field Field::binary(unsigned degree) {
  if (degree == 0 || degree > kMaxBinaryDegree) {
    throw InvalidParams("binary field degree must lie in [1, 20]");
  }
  for (u64 m = u64{1} << degree; m < (u64{2} << degree); ++m) {
    if (binary_irreducible(degree, m)) return Field(Kind::binary, 2, degree, m);
  }
  throw InvalidParams("no irreducible polynomial found");  // unreachable
}

Field Field::rationals() { return Field(Kind::rational, 0, 0, 0); }

Field Field::parse(std::string_view descriptor) {
  descriptor = trim(descriptor);
  if (descriptor == "Q") return rationals();
  auto bad = [&] { return InvalidParams("malformed field descriptor '" + std::string(descriptor) + "'"); };
  auto parse_dec = [&](std::string_view s) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 10);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw bad();
    return v;
  };
  if (descriptor.starts_with("Fp:")) return prime(parse_dec(descriptor.substr(3)));
  if (descriptor.starts_with("F2k:")) {
    auto rest = descriptor.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw bad();
    u64 k = parse_dec(rest.substr(0, colon));
    if (k == 0 || k > kMaxBinaryDegree) throw InvalidParams("binary field degree must lie in [1, 20]");
    return binary(static_cast<unsigned>(k), parse_hex(rest.substr(colon + 1), descriptor));
  }
  throw bad();
}

u64 Field::characteristic() const noexcept {
  switch (kind_) {
    case Kind::prime:
      return p_;
    case Kind::binary:
      return 2;
    case Kind::rational:
      break;
  }
  return 0;
}

u64 Field::size() const {
  switch (kind_) {
    case Kind::prime:
      return p_;
    case Kind::binary:
      return u64{1} << degree_;
    case Kind::rational:
      break;
  }
  throw FieldTooLarge("the rationals are infinite");
}

std::string Field::to_string() const {
  switch (kind_) {
    case Kind::prime:
      return "Fp:" + std::to_string(p_);
    case Kind::binary: {
      std::ostringstream out;
      out << "F2k:" << degree_ << ':' << std::hex << modulus_;
      return out.str();
    }
    case Kind::rational:
      break;
  }
  return "Q";
}

Element Field::zero() const { return from_int(0); }
Element Field::one() const { return from_int(1); }

Element Field::from_int(i64 value) const {
  switch (kind_) {
    case Kind::prime: {
      i64 r = value % static_cast<i64>(p_);
      if (r < 0) r += static_cast<i64>(p_);
      return Element(*this, static_cast<u64>(r));
    }
    case Kind::binary:
      return Element(*this, static_cast<u64>(value & 1));
    case Kind::rational:
      break;
  }
  return Element(*this, mpq_class(static_cast<long>(value)));
}

Element Field::from_rational(const mpq_class& value) const {
  switch (kind_) {
    case Kind::rational:
      return Element(*this, value);
    case Kind::prime:
    case Kind::binary: {
      Element num = kind_ == Kind::prime ? Element(*this, reduce_mod_p(value.get_num(), p_))
                                         : from_int(mpz_class(value.get_num() % 2).get_si());
      Element den = kind_ == Kind::prime ? Element(*this, reduce_mod_p(value.get_den(), p_))
                                         : from_int(mpz_class(value.get_den() % 2).get_si());
      return num / den;
    }
  }
  throw InvalidParams("unknown field kind");
}

Element Field::element(u64 index) const {
  if (index >= size()) throw InvalidParams("element index out of range");
  return Element(*this, index);
}

std::vector<Element> Field::elements() const {
  const u64 n = size();
  std::vector<Element> out;
  out.reserve(n);
  for (u64 i = 0; i < n; ++i) out.push_back(Element(*this, i));
  return out;
}

Element Field::parse_element(std::string_view literal) const {
  switch (kind_) {
    case Kind::rational:
      return Element(*this, parse_fraction(literal));
    case Kind::prime:
      return from_rational(parse_fraction(literal));
    case Kind::binary: {
      u64 bits = parse_hex(literal, literal);
      if (bits >> degree_) {
        throw InvalidParams("hex literal '" + std::string(literal) + "' has more than " + std::to_string(degree_) +
                            " bits");
      }
      return Element(*this, bits);
    }
  }
  throw InvalidParams("unknown field kind");
}

// ---------------------------------------------------------------------------
// Element

void Element::require_same_field(const Element& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("operands belong to " + field_.to_string() + " and " + other.field_.to_string());
  }
}

bool Element::is_zero() const {
  if (field_.kind() == Field::Kind::rational) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<u64>(value_) == 0;
}

bool Element::is_one() const {
  if (field_.kind() == Field::Kind::rational) return std::get<mpq_class>(value_) == 1;
  return std::get<u64>(value_) == 1;
}

u64 Element::bits() const {
  if (field_.kind() == Field::Kind::rational) throw InvalidParams("bits() on a rational element");
  return std::get<u64>(value_);
}

const mpq_class& Element::rational() const {
  if (field_.kind() != Field::Kind::rational) throw InvalidParams("rational() on a finite-field element");
  return std::get<mpq_class>(value_);
}

Element Element::operator-() const {
  switch (field_.kind()) {
    case Field::Kind::prime: {
      u64 v = std::get<u64>(value_);
      return Element(field_, v == 0 ? 0 : field_.prime_modulus() - v);
    }
    case Field::Kind::binary:
      return *this;
    case Field::Kind::rational:
      break;
  }
  return Element(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Element Element::inverse() const {
  if (is_zero()) throw DivisionByZero();
  switch (field_.kind()) {
    case Field::Kind::prime:
      return Element(field_, mod_inverse(std::get<u64>(value_), field_.prime_modulus()));
    case Field::Kind::binary:
      return pow(static_cast<i64>((u64{1} << field_.degree()) - 2));
    case Field::Kind::rational:
      break;
  }
  return Element(field_, mpq_class(1 / std::get<mpq_class>(value_)));
}

Element Element::pow(i64 exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Element result = field_.one();
  Element base = *this;
  u64 e = static_cast<u64>(exponent);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Element& Element::operator+=(const Element& rhs) {
  require_same_field(rhs);
  switch (field_.kind()) {
    case Field::Kind::prime: {
      u64& v = std::get<u64>(value_);
      v += std::get<u64>(rhs.value_);
      if (v >= field_.prime_modulus()) v -= field_.prime_modulus();
      break;
    }
    case Field::Kind::binary:
      std::get<u64>(value_) ^= std::get<u64>(rhs.value_);
      break;
    case Field::Kind::rational:
      std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
      break;
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_field(rhs);
  switch (field_.kind()) {
    case Field::Kind::prime: {
      u64& v = std::get<u64>(value_);
      u64 w = std::get<u64>(rhs.value_);
      v = v >= w ? v - w : v + field_.prime_modulus() - w;
      break;
    }
    case Field::Kind::binary:
      std::get<u64>(value_) ^= std::get<u64>(rhs.value_);
      break;
    case Field::Kind::rational:
      std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
      break;
  }
  return *this;
}

Element& Element::operator*=(const Element& rhs) {
  require_same_field(rhs);
  switch (field_.kind()) {
    case Field::Kind::prime: {
      u64& v = std::get<u64>(value_);
      v = v * std::get<u64>(rhs.value_) % field_.prime_modulus();
      break;
    }
    case Field::Kind::binary: {
      u64& v = std::get<u64>(value_);
      v = gf2_mul(v, std::get<u64>(rhs.value_), field_.degree(), field_.modulus());
      break;
    }
    case Field::Kind::rational:
      std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
      break;
  }
  return *this;
}

Element& Element::operator/=(const Element& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Element& lhs, const Element& rhs) {
  if (!(lhs.field_ == rhs.field_)) return false;
  return lhs.value_ == rhs.value_;
}

bool operator<(const Element& lhs, const Element& rhs) {
  lhs.require_same_field(rhs);
  if (lhs.field_.kind() == Field::Kind::rational) {
    return std::get<mpq_class>(lhs.value_) < std::get<mpq_class>(rhs.value_);
  }
  return std::get<u64>(lhs.value_) < std::get<u64>(rhs.value_);
}

std::string Element::to_string() const {
  switch (field_.kind()) {
    case Field::Kind::prime:
      return std::to_string(std::get<u64>(value_));
    case Field::Kind::binary: {
      std::ostringstream out;
      out << "0x" << std::hex << std::get<u64>(value_);
      return out.str();
    }
    case Field::Kind::rational:
      break;
  }
  return std::get<mpq_class>(value_).get_str();
}

std::size_t Element::hash() const {
  if (field_.kind() == Field::Kind::rational) return std::hash<std::string>{}(to_string());
  return std::hash<u64>{}(std::get<u64>(value_) * 0x9E3779B97F4A7C15ULL + field_.modulus() + field_.prime_modulus());
}

// ---------------------------------------------------------------------------
// Squares

bool is_square(const Element& x) {
  const Field& f = x.field();
  if (x.is_zero()) return true;
  switch (f.kind()) {
    case Field::Kind::prime:
      if (f.prime_modulus() == 2) return true;
      return mod_pow(x.bits(), (f.prime_modulus() - 1) / 2, f.prime_modulus()) == 1;
    case Field::Kind::binary:
      return true;
    case Field::Kind::rational:
      break;
  }
  const mpq_class& v = x.rational();
  return sgn(v) > 0 && mpz_perfect_square_p(v.get_num_mpz_t()) && mpz_perfect_square_p(v.get_den_mpz_t());
}

std::optional<Element> sqrt(const Element& x) {
  const Field& f = x.field();
  if (!is_square(x)) return std::nullopt;
  if (x.is_zero()) return x;
  switch (f.kind()) {
    case Field::Kind::prime: {
      const u64 p = f.prime_modulus();
      if (p == 2) return x;
      u64 r = tonelli_shanks(x.bits(), p);
      return f.element(std::min(r, p - r));
    }
    case Field::Kind::binary:
      return char2_sqrt(x);
    case Field::Kind::rational:
      break;
  }
  const mpq_class& v = x.rational();
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), v.get_den_mpz_t());
  return f.from_rational(mpq_class(num, den));
}

Element char2_sqrt(const Element& x) {
  if (x.field().kind() != Field::Kind::binary) throw InvalidParams("char2_sqrt needs a binary field");
  Element y = x;
  for (unsigned i = 1; i < x.field().degree(); ++i) y = y.square();
  return y;
}

int absolute_trace(const Element& x) {
  if (x.field().kind() != Field::Kind::binary) throw InvalidParams("absolute_trace needs a binary field");
  Element acc = x;
  Element power = x;
  for (unsigned i = 1; i < x.field().degree(); ++i) {
    power = power.square();
    acc += power;
  }
  return static_cast<int>(acc.bits());
}

std::optional<Element> solve_artin_schreier(const Element& c) {
  const Field& f = c.field();
  if (f.kind() != Field::Kind::binary) throw InvalidParams("solve_artin_schreier needs a binary field");
  const unsigned k = f.degree();

  // l -> l^2 + l is F_2-linear; eliminate over the basis 1, x, ..., x^(k-1).
  std::vector<u64> pivot_vec(k, 0), pivot_comb(k, 0);
  std::vector<bool> has_pivot(k, false);
  auto reduce = [&](u64& vec, u64& comb) {
    for (int bit = static_cast<int>(k) - 1; bit >= 0; --bit) {
      if ((vec >> bit & 1) && has_pivot[bit]) {
        vec ^= pivot_vec[bit];
        comb ^= pivot_comb[bit];
      }
    }
  };
  for (unsigned i = 0; i < k; ++i) {
    Element basis = f.element(u64{1} << i);
    u64 vec = (basis.square() + basis).bits();
    u64 comb = u64{1} << i;
    reduce(vec, comb);
    if (vec != 0) {
      int lead = poly_degree(vec);
      has_pivot[lead] = true;
      pivot_vec[lead] = vec;
      pivot_comb[lead] = comb;
    }
  }
  u64 target = c.bits();
  u64 solution = 0;
  reduce(target, solution);
  if (target != 0) return std::nullopt;
  // 1 spans the kernel, so clearing bit 0 picks the other root when needed.
  return f.element(solution & ~u64{1});
}

// ---------------------------------------------------------------------------
// Quadratic polynomials and K_g

QuadraticPoly::QuadraticPoly(Element p_coeff, Element q_coeff) : p(std::move(p_coeff)), q(std::move(q_coeff)) {
  if (!(p.field() == q.field())) throw FieldMismatch("quadratic coefficients from different fields");
  const bool repeated = field().characteristic() == 2 ? p.is_zero() : discriminant().is_zero();
  if (repeated) throw SingularCurve("x^2 + px + q has a repeated root");
}

bool QuadraticPoly::is_irreducible() const {
  if (field().characteristic() == 2) {
    if (field().kind() != Field::Kind::binary) return false;  // F_2 as Fp:2: x^2+x+1 is the only one
    return absolute_trace(q / p.square()) == 1;
  }
  return !is_square(discriminant());
}

std::optional<std::pair<Element, Element>> QuadraticPoly::roots() const {
  if (field().characteristic() == 2) {
    if (field().kind() != Field::Kind::binary) {
      std::vector<Element> found;
      for (const Element& x : field().elements()) {
        if ((*this)(x).is_zero()) found.push_back(x);
      }
      if (found.size() != 2) return std::nullopt;
      return std::pair{found[0], found[1]};
    }
    // x = p z, z^2 + z = q / p^2.
    auto z = solve_artin_schreier(q / p.square());
    if (!z) return std::nullopt;
    Element r1 = p * *z, r2 = p * (*z + 1);
    if (r2 < r1) std::swap(r1, r2);
    return std::pair{r1, r2};
  }
  auto s = sqrt(discriminant());
  if (!s) return std::nullopt;
  Element r1 = (-p + *s) / 2, r2 = (-p - *s) / 2;
  if (r2 < r1) std::swap(r1, r2);
  return std::pair{r1, r2};
}

QuadraticPoly QuadraticPoly::shifted(const Element& shift) const {
  return QuadraticPoly(p + 2 * shift, (*this)(shift));
}

QuadExtElement::QuadExtElement(QuadraticPoly g, Element c0, Element c1)
    : g_(std::move(g)), c0_(std::move(c0)), c1_(std::move(c1)) {
  if (!(c0_.field() == g_.field()) || !(c1_.field() == g_.field())) {
    throw FieldMismatch("extension coordinates from a different field");
  }
}

QuadExtElement QuadExtElement::embed(const QuadraticPoly& g, const Element& c) {
  return QuadExtElement(g, c, g.field().zero());
}

QuadExtElement QuadExtElement::generator(const QuadraticPoly& g) {
  return QuadExtElement(g, g.field().zero(), g.field().one());
}

const Element& QuadExtElement::base_value() const {
  if (!in_base()) throw InvalidParams("extension element " + to_string() + " is not in the base field");
  return c0_;
}

QuadExtElement QuadExtElement::conjugate() const { return QuadExtElement(g_, c0_ - c1_ * g_.p, -c1_); }

QuadExtElement QuadExtElement::inverse() const {
  Element n = ext_norm(*this);
  if (n.is_zero()) throw DivisionByZero();
  return conjugate() * n.inverse();
}

QuadExtElement QuadExtElement::operator-() const { return QuadExtElement(g_, -c0_, -c1_); }

QuadExtElement& QuadExtElement::operator+=(const QuadExtElement& rhs) {
  if (!(g_ == rhs.g_)) throw FieldMismatch("extension elements with different moduli");
  c0_ += rhs.c0_;
  c1_ += rhs.c1_;
  return *this;
}

QuadExtElement& QuadExtElement::operator-=(const QuadExtElement& rhs) {
  if (!(g_ == rhs.g_)) throw FieldMismatch("extension elements with different moduli");
  c0_ -= rhs.c0_;
  c1_ -= rhs.c1_;
  return *this;
}

QuadExtElement& QuadExtElement::operator*=(const QuadExtElement& rhs) {
  if (!(g_ == rhs.g_)) throw FieldMismatch("extension elements with different moduli");
  // X^2 = -p X - q
  Element hi = c1_ * rhs.c1_;
  Element lo = c0_ * rhs.c0_ - hi * g_.q;
  Element mid = c0_ * rhs.c1_ + c1_ * rhs.c0_ - hi * g_.p;
  c0_ = std::move(lo);
  c1_ = std::move(mid);
  return *this;
}

QuadExtElement& QuadExtElement::operator*=(const Element& rhs) {
  c0_ *= rhs;
  c1_ *= rhs;
  return *this;
}

std::string QuadExtElement::to_string() const { return c0_.to_string() + " + " + c1_.to_string() + "*X"; }

Element ext_trace(const QuadExtElement& z) { return 2 * z.c0() - z.c1() * z.modulus().p; }

Element ext_norm(const QuadExtElement& z) {
  const QuadraticPoly& g = z.modulus();
  return z.c0().square() - z.c0() * z.c1() * g.p + z.c1().square() * g.q;
}

std::optional<QuadExtElement> ext_sqrt(const QuadExtElement& z) {
  const QuadraticPoly& g = z.modulus();
  if (g.field().characteristic() == 2) throw InvalidParams("ext_sqrt needs characteristic != 2");
  if (!g.is_irreducible()) throw InvalidParams("ext_sqrt needs an irreducible modulus");

  // A root rho satisfies rho^2 - Tr(rho) rho + Norm(rho) = 0, Norm(rho)^2 = Norm(z)
  // and Tr(rho)^2 = Tr(z) + 2 Norm(rho).
  auto root_norm = sqrt(ext_norm(z));
  if (!root_norm) return std::nullopt;
  for (const Element& n : {*root_norm, -*root_norm}) {
    auto s = sqrt(ext_trace(z) + 2 * n);
    if (!s || s->is_zero()) continue;
    QuadExtElement rho = (z + n) * s->inverse();
    if (rho * rho == z) return rho;
  }
  // Trace-zero roots are multiples of 2X + p, whose square is the discriminant.
  if (!z.in_base()) return std::nullopt;
  auto c = sqrt(z.c0() / g.discriminant());
  if (!c) return std::nullopt;
  QuadExtElement rho = (QuadExtElement::generator(g) * g.field().from_int(2) + g.p) * *c;
  if (rho * rho == z) return rho;
  return std::nullopt;
}

}  // namespace versal
