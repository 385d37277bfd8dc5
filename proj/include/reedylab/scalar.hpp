#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rlab {

// Coefficient field: p == 0 means the rationals, otherwise F_p.
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);
  // "Q" or "Fp:<p>"
  static Field parse(const std::string& s);

  bool is_rational() const { return p == 0; }
  std::uint64_t characteristic() const { return p; }
  // Is the integer n invertible in the field?
  bool invertible(std::uint64_t n) const { return p == 0 ? n != 0 : n % p != 0; }
  std::string str() const;

  friend bool operator==(Field a, Field b) { return a.p == b.p; }
  friend bool operator!=(Field a, Field b) { return a.p != b.p; }
};

bool is_prime(std::uint64_t n);

class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact field element. Rationals use GMP; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& v);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }

  Field field() const { return field_; }
  bool is_zero() const { return field_.p ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return field_.p ? r_ == 1 : q_ == 1; }

  // Rational value; for F_p the representative in [0, p).
  mpq_class value() const { return field_.p ? mpq_class(r_) : q_; }
  std::uint32_t residue() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatch("scalar field mismatch");
  }
  Field field_{};
  mpq_class q_{};
  std::uint32_t r_ = 0;
};

}  // namespace rlab
