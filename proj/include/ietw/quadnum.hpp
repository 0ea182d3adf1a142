// Exact numbers (p + q√d) / r in a real quadratic field.

#ifndef IETW_QUADNUM_HPP_
#define IETW_QUADNUM_HPP_

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "words.hpp"

namespace ietw {

  // Value (p + q√d) / r with r > 0, gcd(p, q, r) = 1, and d square-free.
  // Rationals (q = 0) always store d = 0 so that they mix freely with any
  // radicand; two irrational operands must share d.
  class QuadNum {
   public:
    QuadNum() : p_(0), q_(0), r_(1), d_(0) {}
    QuadNum(long v) : p_(v), q_(0), r_(1), d_(0) {}  // NOLINT(runtime/explicit)
    QuadNum(mpz_class p, mpz_class q, mpz_class r, unsigned long d);

    // Rational p / r.
    static QuadNum rational(mpz_class p, mpz_class r = 1);

    // Literal "(p)" or "(p, q, r)" in the field Q(√d).
    static QuadNum parse(std::string_view literal, unsigned long d);
    // Canonical literal; parse(to_string()) reproduces the value.
    std::string to_string() const;

    mpz_class const& p() const noexcept {
      return p_;
    }
    mpz_class const& q() const noexcept {
      return q_;
    }
    mpz_class const& r() const noexcept {
      return r_;
    }
    unsigned long radicand() const noexcept {
      return d_;
    }
    bool is_rational() const noexcept {
      return q_ == 0;
    }

    int    sign() const;
    double to_double() const;

    QuadNum  operator-() const;
    QuadNum& operator+=(QuadNum const& y);
    QuadNum& operator-=(QuadNum const& y);
    QuadNum& operator*=(QuadNum const& y);

    friend QuadNum operator+(QuadNum x, QuadNum const& y) {
      return x += y;
    }
    friend QuadNum operator-(QuadNum x, QuadNum const& y) {
      return x -= y;
    }
    friend QuadNum operator*(QuadNum x, QuadNum const& y) {
      return x *= y;
    }

    friend bool operator==(QuadNum const& x, QuadNum const& y) {
      return x.p_ == y.p_ && x.q_ == y.q_ && x.r_ == y.r_ && x.d_ == y.d_;
    }
    friend std::strong_ordering operator<=>(QuadNum const& x, QuadNum const& y);

   private:
    void                 canonicalize();
    static unsigned long common_radicand(QuadNum const& x, QuadNum const& y);

    mpz_class     p_, q_, r_;
    unsigned long d_;
  };

  // Exact sign of x - y.
  std::strong_ordering quad_compare(QuadNum const& x, QuadNum const& y);

  // (x + y) / 2
  QuadNum midpoint(QuadNum const& x, QuadNum const& y);

  bool is_square_free(unsigned long d);

}  // namespace ietw

#endif  // IETW_QUADNUM_HPP_
