#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "versal/errors.hpp"

namespace versal {

class Element;

/**
 * Descriptor of a base field: a prime field F_p (p < 2^31), a binary field
 * GF(2^k) = F_2[x]/(m) with k <= 20, or the rationals.
 *
 * Descriptors are small values; every Element carries a copy of its own.
 * The textual form is `Q`, `Fp:<p>` or `F2k:<k>:<modulus-hex>` where the
 * modulus hex includes the leading x^k bit (x^2+x+1 is `7`).
 */
class Field {
 public:
  enum class Kind : std::uint8_t { prime, binary, rational };

  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);
  static constexpr unsigned kMaxBinaryDegree = 20;

  static Field prime(std::uint64_t p);
  static Field binary(unsigned degree, std::uint64_t modulus);
  /// GF(2^k) with the numerically smallest irreducible modulus of degree k.
  static Field binary(unsigned degree);
  static Field rationals();
  static Field parse(std::string_view descriptor);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ != Kind::rational; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept;
  /// Number of elements; throws FieldTooLarge for the rationals.
  std::uint64_t size() const;
  std::uint64_t prime_modulus() const noexcept { return p_; }
  unsigned degree() const noexcept { return degree_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  std::string to_string() const;

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t value) const;
  Element from_rational(const mpq_class& value) const;
  /// The element with enumeration index `index` in [0, size()): the residue
  /// for F_p, the bit-vector for GF(2^k).
  Element element(std::uint64_t index) const;
  /// All elements of a finite field in index order.
  std::vector<Element> elements() const;
  /// Decimal integer or `num/den` for F_p and Q; hex bit-vector (optional 0x) for GF(2^k).
  Element parse_element(std::string_view literal) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t p, unsigned degree, std::uint64_t modulus)
      : kind_(kind), p_(p), degree_(degree), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t p_ = 0;
  unsigned degree_ = 0;
  std::uint64_t modulus_ = 0;
};

/// An element of a Field in canonical form (residue in [0,p), reduced
/// bit-vector, or reduced fraction with positive denominator).
class Element {
 public:
  const Field& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Residue or bit-vector; finite fields only.
  std::uint64_t bits() const;
  /// Rational value; rationals only.
  const mpq_class& rational() const;

  Element operator-() const;
  Element inverse() const;
  Element square() const { return *this * *this; }
  Element pow(std::int64_t exponent) const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element& operator/=(const Element& rhs);

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Element lhs, const Element& rhs) { return lhs *= rhs; }
  friend Element operator/(Element lhs, const Element& rhs) { return lhs /= rhs; }

  friend Element operator+(const Element& lhs, std::int64_t rhs) { return lhs + lhs.field().from_int(rhs); }
  friend Element operator-(const Element& lhs, std::int64_t rhs) { return lhs - lhs.field().from_int(rhs); }
  friend Element operator*(const Element& lhs, std::int64_t rhs) { return lhs * lhs.field().from_int(rhs); }
  friend Element operator/(const Element& lhs, std::int64_t rhs) { return lhs / lhs.field().from_int(rhs); }
  friend Element operator+(std::int64_t lhs, const Element& rhs) { return rhs.field().from_int(lhs) + rhs; }
  friend Element operator-(std::int64_t lhs, const Element& rhs) { return rhs.field().from_int(lhs) - rhs; }
  friend Element operator*(std::int64_t lhs, const Element& rhs) { return rhs.field().from_int(lhs) * rhs; }
  friend Element operator/(std::int64_t lhs, const Element& rhs) { return rhs.field().from_int(lhs) / rhs; }

  friend bool operator==(const Element& lhs, const Element& rhs);

  /// Total order on representations (residue, bit-vector, or numeric value).
  /// Used for deterministic output ordering; it is not a field order.
  friend bool operator<(const Element& lhs, const Element& rhs);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  friend class Field;
  Element(Field field, std::uint64_t bits) : field_(field), value_(bits) {}
  Element(Field field, mpq_class value) : field_(field), value_(std::move(value)) {
    std::get<mpq_class>(value_).canonicalize();
  }

  void require_same_field(const Element& other) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

/// True iff x = y^2 for some y in the same field. 0 counts as a square.
bool is_square(const Element& x);

/// Canonical square root: the root in [0, p/2] for F_p, the nonnegative root
/// over Q, the unique root over GF(2^k). Empty when x is not a square.
std::optional<Element> sqrt(const Element& x);

/// The unique square root in GF(2^k), x^(2^(k-1)).
Element char2_sqrt(const Element& x);

/// Absolute trace GF(2^k) -> F_2, returned as 0 or 1.
int absolute_trace(const Element& x);

/// Solves l^2 + l = c in GF(2^k). Returns the root with bit 0 clear (the
/// other root is l + 1), or empty when the absolute trace of c is 1.
std::optional<Element> solve_artin_schreier(const Element& c);

// ---------------------------------------------------------------------------
// Quadratic polynomials and quadratic extensions.

/// g(x) = x^2 + p x + q, squarefree.
struct QuadraticPoly {
  QuadraticPoly(Element p_coeff, Element q_coeff);

  const Field& field() const noexcept { return p.field(); }
  Element discriminant() const { return p * p - 4 * q; }
  Element operator()(const Element& x) const { return (x + p) * x + q; }
  /// Irreducible over the base field (char != 2: the discriminant is a non-square).
  bool is_irreducible() const;
  /// Both roots when g splits over the base field, smaller representation first.
  std::optional<std::pair<Element, Element>> roots() const;
  /// g(x + shift), re-expanded.
  QuadraticPoly shifted(const Element& shift) const;

  friend bool operator==(const QuadraticPoly&, const QuadraticPoly&) = default;

  Element p;
  Element q;
};

/**
 * c0 + c1·X in K[x]/(g), X the class of x, so X^2 = -p X - q.
 *
 * Meant for irreducible g (the field K_g). Halving over split curves also
 * embeds base-field values here with c1 = 0, where the ring structure is
 * all that is used.
 */
class QuadExtElement {
 public:
  QuadExtElement(QuadraticPoly g, Element c0, Element c1);
  /// c embedded with c1 = 0.
  static QuadExtElement embed(const QuadraticPoly& g, const Element& c);
  /// The class X of x.
  static QuadExtElement generator(const QuadraticPoly& g);

  const QuadraticPoly& modulus() const noexcept { return g_; }
  const Element& c0() const noexcept { return c0_; }
  const Element& c1() const noexcept { return c1_; }

  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
  bool in_base() const { return c1_.is_zero(); }
  /// The base-field value; throws InvalidParams when c1 != 0.
  const Element& base_value() const;

  /// The involution c0 + c1 X -> (c0 - c1 p) - c1 X.
  QuadExtElement conjugate() const;
  QuadExtElement inverse() const;

  QuadExtElement operator-() const;
  QuadExtElement& operator+=(const QuadExtElement& rhs);
  QuadExtElement& operator-=(const QuadExtElement& rhs);
  QuadExtElement& operator*=(const QuadExtElement& rhs);
  QuadExtElement& operator/=(const QuadExtElement& rhs) { return *this *= rhs.inverse(); }

  friend QuadExtElement operator+(QuadExtElement a, const QuadExtElement& b) { return a += b; }
  friend QuadExtElement operator-(QuadExtElement a, const QuadExtElement& b) { return a -= b; }
  friend QuadExtElement operator*(QuadExtElement a, const QuadExtElement& b) { return a *= b; }
  friend QuadExtElement operator/(QuadExtElement a, const QuadExtElement& b) { return a /= b; }

  QuadExtElement& operator+=(const Element& rhs) { c0_ += rhs; return *this; }
  QuadExtElement& operator-=(const Element& rhs) { c0_ -= rhs; return *this; }
  QuadExtElement& operator*=(const Element& rhs);
  friend QuadExtElement operator+(QuadExtElement a, const Element& b) { return a += b; }
  friend QuadExtElement operator-(QuadExtElement a, const Element& b) { return a -= b; }
  friend QuadExtElement operator*(QuadExtElement a, const Element& b) { return a *= b; }
  friend QuadExtElement operator+(const Element& a, const QuadExtElement& b) { return b + a; }
  friend QuadExtElement operator-(const Element& a, const QuadExtElement& b) { return -b + a; }
  friend QuadExtElement operator*(const Element& a, const QuadExtElement& b) { return b * a; }

  friend bool operator==(const QuadExtElement&, const QuadExtElement&) = default;

  std::string to_string() const;

 private:
  QuadraticPoly g_;
  Element c0_;
  Element c1_;
};

/// Tr(c0 + c1 X) = 2 c0 - c1 p.
Element ext_trace(const QuadExtElement& z);
/// Norm(c0 + c1 X) = c0^2 - c0 c1 p + c1^2 q.
Element ext_norm(const QuadExtElement& z);

/// A square root of z in K_g (g irreducible, char != 2), or empty.
std::optional<QuadExtElement> ext_sqrt(const QuadExtElement& z);

}  // namespace versal
