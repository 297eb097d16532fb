#pragma once

#include <gmpxx.h>

#include <string>

namespace betw::dense {

// Exact number a + b*sqrt(d) with rational a, b and a fixed square-free
// positive integer d (shared across a model; default 2).  Ordering is decided
// by rational sign analysis only.
struct Surd {
  mpq_class a;
  mpq_class b;
  long d = 2;

  Surd() = default;
  Surd(mpq_class a_, mpq_class b_ = 0, long d_ = 2);
  static Surd integer(long v) { return Surd(mpq_class(v)); }
  static Surd rational(long num, long den);

  bool is_rational() const { return b == 0; }
  bool is_integer() const;

  Surd operator-() const;
  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const;
  Surd scaled(const mpq_class& q) const;  // q * this

  // -1 / 0 / +1
  int cmp(const Surd& o) const;
  bool operator<(const Surd& o) const { return cmp(o) < 0; }
  bool operator<=(const Surd& o) const { return cmp(o) <= 0; }
  bool operator==(const Surd& o) const { return cmp(o) == 0; }
  bool operator!=(const Surd& o) const { return cmp(o) != 0; }
  bool operator>(const Surd& o) const { return cmp(o) > 0; }
  bool operator>=(const Surd& o) const { return cmp(o) >= 0; }

  // largest integer <= value
  mpz_class floor() const;

  std::string str() const;
};

Surd midpoint(const Surd& x, const Surd& y);

// Some rational strictly between x and y (requires x < y); used to produce
// carrier witnesses on Q when the endpoints are irrational.
mpq_class rational_between(const Surd& x, const Surd& y);

}  // namespace betw::dense
