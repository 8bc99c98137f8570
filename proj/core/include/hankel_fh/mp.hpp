#pragma once

// Minimal value-semantic wrapper over MPFR. Every object carries its own
// binary precision, so computations at different precisions can run on
// different threads without touching global state.

#include <mpfr.h>

#include <string>
#include <utility>

namespace hankel_fh::mp {

using Precision = mpfr_prec_t;

class Real {
 public:
  explicit Real(Precision bits = 128) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(double x, Precision bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(int x, Precision bits) : Real(static_cast<long>(x), bits) {}
  Real(long x, Precision bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(const std::string& decimal, Precision bits) {
    mpfr_init2(v_, bits);
    mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  Precision precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 30) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(double o) { mpfr_add_d(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(double o) { mpfr_sub_d(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(double o) { mpfr_mul_d(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(double o) { mpfr_div_d(v_, v_, o, MPFR_RNDN); return *this; }

  /// this += a * b without a temporary (fused in MPFR).
  void add_product(const Real& a, const Real& b) {
    mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN);
  }

  Real operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

namespace detail {
inline Precision max_prec(const Real& a, const Real& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}
}  // namespace detail

#define HANKEL_FH_MP_BINOP(op, fn, fn_d)                              \
  inline Real operator op(const Real& a, const Real& b) {             \
    Real r(detail::max_prec(a, b));                                   \
    fn(r.get(), a.get(), b.get(), MPFR_RNDN);                         \
    return r;                                                         \
  }                                                                   \
  inline Real operator op(const Real& a, double b) {                  \
    Real r(a.precision());                                            \
    fn_d(r.get(), a.get(), b, MPFR_RNDN);                             \
    return r;                                                         \
  }

HANKEL_FH_MP_BINOP(+, mpfr_add, mpfr_add_d)
HANKEL_FH_MP_BINOP(-, mpfr_sub, mpfr_sub_d)
HANKEL_FH_MP_BINOP(*, mpfr_mul, mpfr_mul_d)
HANKEL_FH_MP_BINOP(/, mpfr_div, mpfr_div_d)
#undef HANKEL_FH_MP_BINOP

inline Real operator+(double a, const Real& b) { return b + a; }
inline Real operator*(double a, const Real& b) { return b * a; }
inline Real operator-(double a, const Real& b) {
  Real r(b.precision());
  mpfr_d_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
inline Real operator/(double a, const Real& b) {
  Real r(b.precision());
  mpfr_d_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) < 0; }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) > 0; }

#define HANKEL_FH_MP_UNARY(name, fn)          \
  inline Real name(const Real& a) {           \
    Real r(a.precision());                    \
    fn(r.get(), a.get(), MPFR_RNDN);          \
    return r;                                 \
  }

HANKEL_FH_MP_UNARY(exp, mpfr_exp)
HANKEL_FH_MP_UNARY(log, mpfr_log)
HANKEL_FH_MP_UNARY(sqrt, mpfr_sqrt)
HANKEL_FH_MP_UNARY(sin, mpfr_sin)
HANKEL_FH_MP_UNARY(cos, mpfr_cos)
HANKEL_FH_MP_UNARY(sinh, mpfr_sinh)
HANKEL_FH_MP_UNARY(cosh, mpfr_cosh)
HANKEL_FH_MP_UNARY(abs, mpfr_abs)
HANKEL_FH_MP_UNARY(log1p, mpfr_log1p)
#undef HANKEL_FH_MP_UNARY

inline Real atan2(const Real& y, const Real& x) {
  Real r(detail::max_prec(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real hypot(const Real& a, const Real& b) {
  Real r(detail::max_prec(a, b));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

inline Real pi(Precision bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

inline Real euler_gamma(Precision bits) {
  Real r(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

/// log(n!) exactly rounded via lgamma.
inline Real log_factorial(unsigned long n, Precision bits) {
  Real x(static_cast<long>(n) + 1, bits);
  Real r(bits);
  int sign = 0;
  mpfr_lgamma(r.get(), &sign, x.get(), MPFR_RNDN);
  return r;
}

/// Complex number over Real; just enough arithmetic for moments and LU.
struct Complex {
  Real re;
  Real im;

  explicit Complex(Precision bits = 128) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Precision precision() const { return re.precision(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Complex operator/(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

/// exp(i theta)
inline Complex cis(const Real& theta) {
  Complex r(theta.precision());
  mpfr_sin_cos(r.im.get(), r.re.get(), theta.get(), MPFR_RNDN);
  return r;
}

}  // namespace hankel_fh::mp
