#include "ietw/quadnum.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace ietw {

  bool is_square_free(unsigned long d) {
    for (unsigned long f = 2; f * f <= d; ++f) {
      if (d % (f * f) == 0) {
        return false;
      }
    }
    return true;
  }

  QuadNum::QuadNum(mpz_class p, mpz_class q, mpz_class r, unsigned long d)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(d) {
    if (r_ == 0) {
      throw Error("quadratic number with zero denominator");
    }
    if (d_ > 1 && !is_square_free(d_)) {
      throw Error("radicand " + std::to_string(d_) + " is not square-free");
    }
    canonicalize();
  }

  QuadNum QuadNum::rational(mpz_class p, mpz_class r) {
    return QuadNum(std::move(p), 0, std::move(r), 0);
  }

  void QuadNum::canonicalize() {
    if (d_ == 1) {
      p_ += q_;
      q_ = 0;
    }
    if (d_ == 0) {
      q_ = 0;
    }
    if (r_ < 0) {
      p_ = -p_;
      q_ = -q_;
      r_ = -r_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
    if (g > 1) {
      p_ /= g;
      q_ /= g;
      r_ /= g;
    }
    if (q_ == 0) {
      d_ = 0;
    }
  }

  unsigned long QuadNum::common_radicand(QuadNum const& x, QuadNum const& y) {
    if (x.d_ == 0) {
      return y.d_;
    }
    if (y.d_ == 0 || x.d_ == y.d_) {
      return x.d_;
    }
    throw Error("mismatched radicands " + std::to_string(x.d_) + " and "
                + std::to_string(y.d_));
  }

  QuadNum QuadNum::operator-() const {
    QuadNum z(*this);
    z.p_ = -z.p_;
    z.q_ = -z.q_;
    return z;
  }

  QuadNum& QuadNum::operator+=(QuadNum const& y) {
    auto d = common_radicand(*this, y);
    p_     = p_ * y.r_ + y.p_ * r_;
    q_     = q_ * y.r_ + y.q_ * r_;
    r_ *= y.r_;
    d_ = d;
    canonicalize();
    return *this;
  }

  QuadNum& QuadNum::operator-=(QuadNum const& y) {
    return *this += -y;
  }

  QuadNum& QuadNum::operator*=(QuadNum const& y) {
    auto      d  = common_radicand(*this, y);
    mpz_class np = p_ * y.p_ + q_ * y.q_ * d;
    mpz_class nq = p_ * y.q_ + q_ * y.p_;
    p_           = std::move(np);
    q_           = std::move(nq);
    r_ *= y.r_;
    d_ = d;
    canonicalize();
    return *this;
  }

  int QuadNum::sign() const {
    int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0) {
      return sp;
    }
    if (sp == 0) {
      return sq;
    }
    if (sp == sq) {
      return sp;
    }
    // Opposite signs: compare p^2 with q^2 d.
    mpz_class lhs = p_ * p_, rhs = q_ * q_ * d_;
    int       c   = cmp(lhs, rhs);
    return c == 0 ? 0 : (c > 0 ? sp : sq);
  }

  double QuadNum::to_double() const {
    return (p_.get_d() + q_.get_d() * std::sqrt(static_cast<double>(d_)))
           / r_.get_d();
  }

  std::strong_ordering operator<=>(QuadNum const& x, QuadNum const& y) {
    QuadNum::common_radicand(x, y);
    if (x == y) {
      return std::strong_ordering::equal;
    }
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::strong_ordering quad_compare(QuadNum const& x, QuadNum const& y) {
    return x <=> y;
  }

  QuadNum midpoint(QuadNum const& x, QuadNum const& y) {
    auto s = x + y;
    return QuadNum(s.p(), s.q(), s.r() * 2, s.radicand());
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  QuadNum QuadNum::parse(std::string_view literal, unsigned long d) {
    auto fail = [&](std::string const& why) -> Error {
      return Error("bad number literal \"" + std::string(literal) + "\": " + why);
    };
    auto b = literal.find_first_not_of(" \t");
    auto e = literal.find_last_not_of(" \t");
    if (b == std::string_view::npos || literal[b] != '(' || literal[e] != ')') {
      throw fail("expected (p) or (p, q, r)");
    }
    auto                     body = literal.substr(b + 1, e - b - 1);
    std::vector<std::string> parts;
    std::string              cur;
    for (char ch : body) {
      if (ch == ',') {
        parts.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur.push_back(ch);
      }
    }
    parts.push_back(cur);
    std::vector<mpz_class> v;
    for (auto const& s : parts) {
      mpz_class z;
      if (s.empty() || z.set_str(s, 10) != 0) {
        throw fail("\"" + s + "\" is not an integer");
      }
      v.push_back(z);
    }
    if (v.size() == 1) {
      return rational(v[0]);
    }
    if (v.size() != 3) {
      throw fail("expected 1 or 3 components");
    }
    if (v[2] <= 0) {
      throw fail("denominator must be positive");
    }
    if (v[1] != 0 && d <= 1) {
      throw fail("irrational part given but no radicand d > 1 is in effect");
    }
    return QuadNum(v[0], v[1], v[2], v[1] == 0 ? 0 : d);
  }

  std::string QuadNum::to_string() const {
    if (q_ == 0 && r_ == 1) {
      return "(" + p_.get_str() + ")";
    }
    return "(" + p_.get_str() + ", " + q_.get_str() + ", " + r_.get_str() + ")";
  }

}  // namespace ietw
