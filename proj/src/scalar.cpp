#include "reedylab/scalar.hpp"

namespace rlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  return Field{p};
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.rfind("Fp:", 0) == 0) {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(s.substr(3), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field descriptor: " + s);
    }
    if (used != s.size() - 3 || p > 65521) throw std::invalid_argument("bad field descriptor: " + s);
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("bad field descriptor: " + s);
}

std::string Field::str() const { return p == 0 ? "Q" : "Fp:" + std::to_string(p); }

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.p) {
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += f.p;
    r_ = static_cast<std::uint32_t>(m);
  } else {
    q_ = v;
  }
}

Scalar::Scalar(Field f, const mpq_class& v) : field_(f) {
  if (f.p) {
    mpz_class num = v.get_num() % f.p, den = v.get_den() % f.p;
    if (num < 0) num += f.p;
    if (den == 0) throw std::domain_error("denominator divisible by p");
    Scalar n(f, num.get_si()), d(f, den.get_si());
    r_ = (n / d).r_;
  } else {
    q_ = v;
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar s;
  s.field_ = field_;
  if (field_.p)
    s.r_ = static_cast<std::uint32_t>((std::uint64_t(r_) + o.r_) % field_.p);
  else
    s.q_ = q_ + o.q_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  Scalar s;
  s.field_ = field_;
  if (field_.p)
    s.r_ = static_cast<std::uint32_t>((std::uint64_t(r_) + field_.p - o.r_) % field_.p);
  else
    s.q_ = q_ - o.q_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar s;
  s.field_ = field_;
  if (field_.p)
    s.r_ = static_cast<std::uint32_t>((std::uint64_t(r_) * o.r_) % field_.p);
  else
    s.q_ = q_ * o.q_;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.p)
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s;
  s.field_ = field_;
  if (field_.p) {
    // Fermat: r^(p-2)
    std::uint64_t base = r_, e = field_.p - 2, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % field_.p;
      base = base * base % field_.p;
      e >>= 1;
    }
    s.r_ = static_cast<std::uint32_t>(acc);
  } else {
    s.q_ = 1 / q_;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.p ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::str() const { return field_.p ? std::to_string(r_) : q_.get_str(); }

}  // namespace rlab
