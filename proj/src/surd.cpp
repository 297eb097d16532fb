#include "betw/surd.hpp"

#include <stdexcept>

namespace betw::dense {

namespace {

long join_d(const Surd& x, const Surd& y) {
  if (x.b == 0) return y.d;
  if (y.b == 0) return x.d;
  if (x.d != y.d) throw std::invalid_argument("mixing square roots of different bases");
  return x.d;
}

}  // namespace

Surd::Surd(mpq_class a_, mpq_class b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
  if (d <= 0) throw std::invalid_argument("square root base must be positive");
  a.canonicalize();
  b.canonicalize();
}

Surd Surd::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return Surd(q);
}

bool Surd::is_integer() const { return b == 0 && a.get_den() == 1; }

Surd Surd::operator-() const { return Surd(-a, -b, d); }

Surd Surd::operator+(const Surd& o) const { return Surd(a + o.a, b + o.b, join_d(*this, o)); }

Surd Surd::operator-(const Surd& o) const { return Surd(a - o.a, b - o.b, join_d(*this, o)); }

Surd Surd::scaled(const mpq_class& q) const { return Surd(a * q, b * q, d); }

int Surd::cmp(const Surd& o) const {
  long base = join_d(*this, o);
  // this - o = A + B*sqrt(base)
  mpq_class A = a - o.a;
  mpq_class B = b - o.b;
  int sA = sgn(A), sB = sgn(B);
  if (sB == 0) return sA;
  mpq_class lhs = A * A;           // A^2
  mpq_class rhs = B * B * base;    // B^2 d
  int sq = ::cmp(lhs, rhs);        // sign of A^2 - B^2 d
  if (sB > 0) {
    // sign of A + B sqrt(d), B > 0: negative only when A < 0 and A^2 > B^2 d
    if (sA >= 0) return 1;
    return sq > 0 ? -1 : (sq == 0 ? 0 : 1);
  }
  // B < 0: positive only when A > 0 and A^2 > B^2 d
  if (sA <= 0) return -1;
  return sq > 0 ? 1 : (sq == 0 ? 0 : -1);
}

mpz_class Surd::floor() const {
  if (b == 0) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return q;
  }
  // |b*sqrt(d)| <= (|b_num/b_den| + 1) * (isqrt(d) + 1)
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), mpz_class(d).get_mpz_t());
  mpq_class bound = (abs(b) + 1) * mpq_class(root + 1);
  mpq_class alo = a - bound, ahi = a + bound;
  mpz_class lo, hi;
  mpz_fdiv_q(lo.get_mpz_t(), alo.get_num().get_mpz_t(), alo.get_den().get_mpz_t());
  mpz_cdiv_q(hi.get_mpz_t(), ahi.get_num().get_mpz_t(), ahi.get_den().get_mpz_t());
  // invariant: lo <= floor(value) <= hi
  while (lo < hi) {
    mpz_class mid = (lo + hi + 1) / 2;
    if (Surd(mpq_class(mid)).cmp(*this) <= 0)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::string Surd::str() const {
  if (b == 0) return a.get_str();
  std::string out = a == 0 ? "" : a.get_str();
  if (b > 0 && !out.empty()) out += " + ";
  if (b < 0) out += out.empty() ? "-" : " - ";
  mpq_class mag = abs(b);
  if (mag != 1) out += mag.get_str() + " ";
  out += "sqrt " + std::to_string(d);
  return out;
}

Surd midpoint(const Surd& x, const Surd& y) { return (x + y).scaled(mpq_class(1, 2)); }

mpq_class rational_between(const Surd& x, const Surd& y) {
  if (!(x < y)) throw std::invalid_argument("rational_between needs x < y");
  Surd mid = midpoint(x, y);
  if (mid.is_rational()) return mid.a;
  for (mpz_class k = 1;; k *= 2) {
    // candidate floor(x*k)/k + 1/k
    Surd scaled = x.scaled(mpq_class(k));
    mpq_class cand(scaled.floor() + 1, k);
    cand.canonicalize();
    Surd c(cand);
    if (x < c && c < y) return cand;
  }
}

}  // namespace betw::dense
