#include "hankel_fh/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

namespace hankel_fh::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kMaxPanelWidth = 0.5;
constexpr double kTailPanelWidth = 2.0;
constexpr double kStartStep = 0.5;
constexpr int kMinLevel = 3;
constexpr int kMaxLevel = 12;
constexpr int kGuardBits = 32;

std::string describe(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

// degree of the polynomial defined by a Chebyshev series
std::size_t cheb_degree(const FieldW& w) {
  std::size_t d = w.size();
  while (d > 0 && w.coeffs()[d - 1] == 0.0) --d;
  return d == 0 ? 0 : d - 1;
}

double log_weight_bound(const WeightSpec& ws, int count, double x) {
  double r = -ws.n * ws.v(x);
  if (!ws.w.empty()) {
    // polynomial continuation of the series (Clenshaw is valid for any real x)
    r += ws.w(x);
  }
  for (const auto& s : ws.cfg.items()) {
    r += s.alpha.real() * std::log(std::abs(x - s.t)) + kPi * std::abs(s.beta.imag());
  }
  r += (2.0 * count - 2.0) * std::log(std::max(1.0, std::abs(x)));
  return r;
}

double tail_end(const WeightSpec& ws, int count, double peak, double drop, int direction) {
  constexpr double kStep = 0.05;
  constexpr double kFar = 1e4;
  constexpr int kConfirm = 40;
  double x = direction;
  double last_above = x;
  double prev = log_weight_bound(ws, count, x);
  int below = 0;
  while (std::abs(x) < kFar) {
    x += direction * kStep;
    const double f = log_weight_bound(ws, count, x);
    if (f > peak - drop || f > prev) {
      last_above = x;
      below = 0;
    } else if (++below >= kConfirm) {
      return last_above + direction * kStep;
    }
    prev = f;
  }
  throw ConvergenceError("oracle: weight tail does not decay before |x| = " + describe(kFar));
}

struct Panel {
  double a;
  double b;
  int sing_a;  // singularity index at a, or -1
  int sing_b;
  double alpha_a;  // Re alpha at that endpoint (0 if none)
  double alpha_b;
};

struct Layout {
  std::vector<Panel> panels;
  // nodes whose double-precision log bound is below this contribute nothing
  double negligible = 0.0;
};

Layout make_panels(const WeightSpec& ws, int count, mp::Precision bits) {
  double peak = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 2000; ++i) {
    const double x = -1.0 + i / 1000.0;
    bool near = false;
    for (const auto& s : ws.cfg.items()) near = near || std::abs(x - s.t) < 1e-6;
    if (!near) peak = std::max(peak, log_weight_bound(ws, count, x));
  }
  const double drop = (static_cast<double>(bits) + 64.0) * kLn2;
  const double left = tail_end(ws, count, peak, drop, -1);
  const double right = tail_end(ws, count, peak, drop, 1);

  std::vector<double> cuts{left, -1.0};
  std::vector<int> index{-1, -1};
  for (std::size_t j = 0; j < ws.cfg.size(); ++j) {
    cuts.push_back(ws.cfg[j].t);
    index.push_back(static_cast<int>(j));
  }
  cuts.push_back(1.0);
  index.push_back(-1);
  cuts.push_back(right);
  index.push_back(-1);

  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const bool tail = i == 0 || i + 2 == cuts.size();
    const double width = tail ? kTailPanelWidth : kMaxPanelWidth;
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
    for (int p = 0; p < pieces; ++p) {
      Panel q;
      q.a = p == 0 ? a : a + (b - a) * p / pieces;
      q.b = p == pieces - 1 ? b : a + (b - a) * (p + 1) / pieces;
      q.sing_a = p == 0 ? index[i] : -1;
      q.sing_b = p == pieces - 1 ? index[i + 1] : -1;
      q.alpha_a = q.sing_a >= 0 ? ws.cfg[q.sing_a].alpha.real() : 0.0;
      q.alpha_b = q.sing_b >= 0 ? ws.cfg[q.sing_b].alpha.real() : 0.0;
      panels.push_back(q);
    }
  }
  return {panels, peak - drop - 64.0 * kLn2};
}

// log of |w(x)| max(1,|x|)^{2 count - 2} dx/du at DE parameter u, in double
double node_log_bound(const WeightSpec& ws, int count, const Panel& p, double u) {
  const double s = 0.5 * kPi * std::sinh(u);
  const double as = std::abs(s);
  const double log_cosh_s = as + std::log1p(std::exp(-2.0 * as)) - kLn2;
  const double width = p.b - p.a;
  const double log_d_a = std::log(width) - std::log1p(std::exp(-2.0 * s));
  const double log_d_b = std::log(width) - std::log1p(std::exp(2.0 * s));
  const double x = s < 0 ? p.a + std::exp(log_d_a) : p.b - std::exp(log_d_b);
  double r = std::log(width * kPi * std::cosh(u) / 4.0) - 2.0 * log_cosh_s;
  r += -ws.n * ws.v(x);
  if (!ws.w.empty()) r += ws.w(x);
  for (std::size_t j = 0; j < ws.cfg.size(); ++j) {
    const auto& sj = ws.cfg[j];
    const int jj = static_cast<int>(j);
    const double lg = jj == p.sing_a ? log_d_a : jj == p.sing_b ? log_d_b : std::log(std::abs(x - sj.t));
    r += sj.alpha.real() * lg + kPi * std::abs(sj.beta.imag());
  }
  return r + (2.0 * count - 2.0) * std::log(std::max(1.0, std::abs(x)));
}

class NodeEvaluator {
 public:
  NodeEvaluator(const WeightSpec& ws, mp::Precision bits) : ws_(ws), bits_(bits) {
    pi_ = mp::pi(bits);
    for (double c : ws.v.coeffs()) v_.emplace_back(c, bits);
    for (double c : ws.w.coeffs()) w_.emplace_back(c, bits);
    for (const auto& s : ws.cfg.items()) t_.emplace_back(s.t, bits);
  }

  // x and complex mass g = w(x) dx/du at DE parameter u = log(eu) on panel p.
  void eval(const Panel& p, const mp::Real& eu, mp::Real& x, mp::Complex& g) const {
    const mp::Real a(p.a, bits_), b(p.b, bits_);
    const mp::Real width = b - a;
    const mp::Real inv = 1.0 / eu;
    const mp::Real s = (eu - inv) * (pi_ * 0.25);
    const mp::Real e = mp::exp(s * 2.0);
    const mp::Real one_plus_e = e + 1.0;
    const mp::Real d_b = width / one_plus_e;
    const mp::Real d_a = width * e / one_plus_e;
    x = d_a < d_b ? a + d_a : b - d_b;
    const mp::Real dxdu = width * pi_ * ((eu + inv) * 0.5) * e / (one_plus_e * one_plus_e);

    mp::Real lr = -(horner(x) * static_cast<double>(ws_.n));
    if (!w_.empty()) lr += clenshaw(x);
    mp::Real li(bits_);
    bool has_phase = false;
    const double mid = 0.5 * (p.a + p.b);
    for (std::size_t j = 0; j < t_.size(); ++j) {
      const auto& sj = ws_.cfg[j];
      const int jj = static_cast<int>(j);
      mp::Real lg = jj == p.sing_a ? mp::log(d_a) : jj == p.sing_b ? mp::log(d_b) : mp::log(mp::abs(x - t_[j]));
      if (sj.alpha.real() != 0.0) lr += lg * sj.alpha.real();
      if (sj.alpha.imag() != 0.0) {
        li += lg * sj.alpha.imag();
        has_phase = true;
      }
      const double sigma = mid < sj.t ? 1.0 : -1.0;
      if (sj.beta.real() != 0.0) {
        li += pi_ * (sigma * sj.beta.real());
        has_phase = true;
      }
      if (sj.beta.imag() != 0.0) lr -= pi_ * (sigma * sj.beta.imag());
    }
    const mp::Real mag = mp::exp(lr) * dxdu;
    if (has_phase) {
      g = mp::cis(li) * mag;
    } else {
      g = mp::Complex(mag, mp::Real(bits_));
    }
  }

 private:
  mp::Real horner(const mp::Real& x) const {
    mp::Real r(bits_);
    for (std::size_t k = v_.size(); k-- > 0;) {
      r *= x;
      r += v_[k];
    }
    return r;
  }

  mp::Real clenshaw(const mp::Real& x) const {
    mp::Real b1(bits_), b2(bits_);
    for (std::size_t k = w_.size(); k-- > 1;) {
      mp::Real b0 = x * b1 * 2.0 - b2 + w_[k];
      b2 = std::move(b1);
      b1 = std::move(b0);
    }
    return x * b1 - b2 + w_[0];
  }

  const WeightSpec& ws_;
  mp::Precision bits_;
  mp::Real pi_;
  std::vector<mp::Real> v_, w_, t_;
};

double u_max_for(const Panel& p, mp::Precision bits) {
  const double worst = 1.0 + std::min({0.0, p.alpha_a, p.alpha_b});
  const double need = (static_cast<double>(bits) + 64.0) * kLn2 / worst;
  return std::log(2.0 * need / kPi) + 0.5;
}

struct Accumulator {
  std::vector<mp::Complex> s;
  // sum |g| |x|^k, only used as a scale
  std::vector<long double> abs_s;
  mp::Complex p;

  Accumulator(int moments, mp::Precision bits)
      : s(static_cast<std::size_t>(moments), mp::Complex(bits)),
        abs_s(static_cast<std::size_t>(moments), 0.0L),
        p(bits) {}

  void add(const mp::Real& x, const mp::Complex& g) {
    const bool real = g.im.is_zero();
    mpfr_set(p.re.get(), g.re.get(), MPFR_RNDN);
    mpfr_set(p.im.get(), g.im.get(), MPFR_RNDN);
    long double ap = std::hypot(mpfr_get_ld(g.re.get(), MPFR_RNDN), mpfr_get_ld(g.im.get(), MPFR_RNDN));
    const long double ax = std::abs(mpfr_get_ld(x.get(), MPFR_RNDN));
    for (std::size_t k = 0; k < s.size(); ++k) {
      s[k].re += p.re;
      if (!real) s[k].im += p.im;
      abs_s[k] += ap;
      if (k + 1 < s.size()) {
        mpfr_mul(p.re.get(), p.re.get(), x.get(), MPFR_RNDN);
        if (!real) mpfr_mul(p.im.get(), p.im.get(), x.get(), MPFR_RNDN);
        ap *= ax;
      }
    }
  }
};

mp::Real rounded(const mp::Real& x, mp::Precision bits) {
  mp::Real r(bits);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

void reduce_phase(mp::Complex& unit) {
  if (unit.im.is_zero()) unit.im = mp::Real(unit.re.precision());
}

}  // namespace

void WeightSpec::validate() const {
  if (n < 1) throw DomainError("weight: n must be at least 1");
  const std::size_t dw = cheb_degree(w);
  if (dw > v.degree()) {
    throw DomainError("weight: e^{W - nV} is not integrable (deg W > deg V)");
  }
  if (dw == v.degree() && dw > 0) {
    const double lead_w = w.coeffs()[dw] * std::ldexp(1.0, static_cast<int>(dw) - 1);
    if (!(n * v.coeffs().back() > lead_w)) {
      throw DomainError("weight: e^{W - nV} is not integrable (leading terms)");
    }
  }
}

bool WeightSpec::is_positive() const {
  return std::all_of(cfg.items().begin(), cfg.items().end(), [](const auto& s) {
    return s.alpha.imag() == 0.0 && s.beta == std::complex<double>(0.0);
  });
}

std::string to_string(Method m) {
  return m == Method::kMomentDeterminant ? "moment_determinant" : "op_recurrence";
}

mp::Precision default_precision_bits(int n) { return std::max<mp::Precision>(256, 48L * n); }

Discretization discretize(const WeightSpec& ws, int count, mp::Precision bits) {
  ws.validate();
  if (count < 1) throw DomainError("discretize: count must be at least 1");
  const mp::Precision work = bits + kGuardBits;
  const int moments = 2 * count - 1;
  const Layout layout = make_panels(ws, count, bits);
  const NodeEvaluator eval(ws, work);

  Discretization d;
  Accumulator acc(moments, work);
  std::vector<mp::Complex> previous;
  const double log_accept = -0.6 * static_cast<double>(bits) * kLn2;
  std::vector<double> previous_log_rel;
  mp::Real x(work), eu(work), step(work);
  mp::Complex g(work);

  for (int level = 0; level <= kMaxLevel; ++level) {
    const double h = kStartStep * std::ldexp(1.0, -level);
    const long stride = level == 0 ? 1 : 2;
    step = mp::exp(mp::Real(static_cast<double>(stride) * h, work));
    for (const Panel& p : layout.panels) {
      const double u_max = u_max_for(p, bits);
      long k = -static_cast<long>(std::ceil(u_max / h));
      if (level > 0 && k % 2 == 0) --k;
      eu = mp::exp(mp::Real(static_cast<double>(k) * h, work));
      for (; static_cast<double>(k) * h <= u_max + h; k += stride, eu *= step) {
        if (node_log_bound(ws, count, p, static_cast<double>(k) * h) < layout.negligible) continue;
        eval.eval(p, eu, x, g);
        if (g.is_zero()) continue;
        acc.add(x, g);
        d.x.push_back(x);
        d.lambda.push_back(g);
      }
    }
    std::vector<mp::Complex> current;
    current.reserve(acc.s.size());
    const mp::Real hh(h, work);
    for (const auto& sk : acc.s) current.push_back(sk * hh);
    std::vector<double> log_rel(current.size(), -std::numeric_limits<double>::infinity());
    if (level > 0) {
      for (std::size_t k = 0; k < current.size(); ++k) {
        const mp::Real diff = mp::abs(current[k] - previous[k]);
        const long double scale = acc.abs_s[k] * static_cast<long double>(h);
        if (!diff.is_zero() && scale > 0.0L) {
          log_rel[k] = static_cast<double>(mp::log(diff).to_double() - std::log(scale));
        }
      }
    }
    if (level >= kMinLevel) {
      bool ok = true;
      for (std::size_t k = 0; k < current.size() && ok; ++k) {
        // quadratic convergence: the next difference is about diff^2 / previous diff
        double estimate = log_rel[k];
        if (std::isfinite(estimate) && std::isfinite(previous_log_rel[k])) {
          estimate = std::min(estimate, estimate + (estimate - previous_log_rel[k]));
        }
        ok = estimate <= log_accept;
      }
      if (ok) {
        for (auto& l : d.lambda) l = l * hh;
        d.moments = std::move(current);
        d.level = level;
        return d;
      }
    }
    previous_log_rel = std::move(log_rel);
    previous = std::move(current);
  }
  throw ConvergenceError("oracle: quadrature refinement did not converge at " +
                         std::to_string(bits) + " bits");
}

std::vector<mp::Complex> compute_moments(const WeightSpec& ws, int count, mp::Precision bits) {
  if (bits < 128) throw DomainError("compute_moments: precision must be at least 128 bits");
  return discretize(ws, count, bits).moments;
}

HankelResult hankel_log_det(const std::vector<mp::Complex>& moments, int k, mp::Precision bits) {
  if (k < 1) throw DomainError("hankel_log_det: size must be at least 1");
  if (moments.size() < static_cast<std::size_t>(2 * k - 1)) {
    throw DomainError("hankel_log_det: need " + std::to_string(2 * k - 1) + " moments");
  }
  HankelResult r;
  r.n = k;
  r.precision_bits = bits;
  r.method = Method::kMomentDeterminant;
  const std::size_t n = static_cast<std::size_t>(k);
  std::vector<mp::Complex> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& m = moments[i + j];
      a.emplace_back(rounded(m.re, bits), rounded(m.im, bits));
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> mp::Complex& { return a[i * n + j]; };

  mp::Real log_abs(bits);
  mp::Complex unit(mp::Real(1L, bits), mp::Real(bits));
  double unwrapped = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    mp::Real best = at(c, c).re * at(c, c).re + at(c, c).im * at(c, c).im;
    for (std::size_t i = c + 1; i < n; ++i) {
      mp::Real m2 = at(i, c).re * at(i, c).re + at(i, c).im * at(i, c).im;
      if (m2 > best) {
        best = std::move(m2);
        piv = i;
      }
    }
    if (best.is_zero()) {
      r.is_zero = true;
      r.log_abs = -std::numeric_limits<double>::infinity();
      r.log_abs_mp = mp::Real(bits);
      mpfr_set_inf(r.log_abs_mp.get(), -1);
      return r;
    }
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(c, j), at(piv, j));
      unit = mp::Complex(-unit.re, -unit.im);
      unwrapped += kPi;
    }
    const mp::Complex& p = at(c, c);
    const mp::Real mag = mp::abs(p);
    log_abs += mp::log(mag);
    unit = unit * mp::Complex(p.re / mag, p.im / mag);
    unwrapped += mp::arg(p).to_double();
    for (std::size_t i = c + 1; i < n; ++i) {
      const mp::Complex f = at(i, c) / p;
      for (std::size_t j = c + 1; j < n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  reduce_phase(unit);
  r.log_abs_mp = log_abs;
  r.log_abs = log_abs.to_double();
  r.phase = mp::arg(unit).to_double();
  if (r.phase <= -kPi) r.phase = kPi;
  r.phase_unwrapped = unwrapped;
  return r;
}

HankelResult op_recurrence_log_det(const WeightSpec& ws, mp::Precision bits) {
  if (!ws.is_positive()) {
    throw DomainError("op_recurrence_log_det: weight is not positive (needs real alpha, beta = 0)");
  }
  const Discretization d = discretize(ws, ws.n, bits);
  const mp::Precision work = bits + kGuardBits;
  const std::size_t m = d.x.size();
  std::vector<mp::Real> lam;
  lam.reserve(m);
  for (const auto& l : d.lambda) lam.push_back(l.re);

  HankelResult r;
  r.n = ws.n;
  r.precision_bits = bits;
  r.method = Method::kOpRecurrence;
  std::vector<mp::Real> p_prev(m, mp::Real(work)), p_cur(m, mp::Real(1L, work));
  mp::Real h_prev(1L, work);
  mp::Real log_abs(work);
  for (int j = 0; j < ws.n; ++j) {
    mp::Real h(work), xh(work);
    for (std::size_t i = 0; i < m; ++i) {
      const mp::Real q = lam[i] * p_cur[i] * p_cur[i];
      h += q;
      xh.add_product(q, d.x[i]);
    }
    if (!(h > 0.0)) {
      throw ConvergenceError("op_recurrence_log_det: non-positive norm at degree " +
                             std::to_string(j));
    }
    log_abs += mp::log(h);
    if (j + 1 == ws.n) break;
    const mp::Real a = xh / h;
    const mp::Real b = j == 0 ? mp::Real(work) : h / h_prev;
    for (std::size_t i = 0; i < m; ++i) {
      mp::Real next = (d.x[i] - a) * p_cur[i] - b * p_prev[i];
      p_prev[i] = std::move(p_cur[i]);
      p_cur[i] = std::move(next);
    }
    h_prev = std::move(h);
  }
  r.log_abs_mp = log_abs;
  r.log_abs = log_abs.to_double();
  return r;
}

namespace {

HankelResult single_run(const WeightSpec& ws, mp::Precision bits, Method method) {
  if (method == Method::kOpRecurrence) return op_recurrence_log_det(ws, bits);
  return hankel_log_det(compute_moments(ws, ws.n, bits), ws.n, bits);
}

double wrap(double phase) {
  double p = std::remainder(phase, 2.0 * kPi);
  if (p <= -kPi) p += 2.0 * kPi;
  return p;
}

}  // namespace

HankelResult oracle_log_det(const WeightSpec& ws, mp::Precision bits, Method method) {
  HankelResult full = single_run(ws, bits, method);
  const mp::Precision half = std::max<mp::Precision>(128, bits / 2);
  if (half >= bits) return full;
  const HankelResult coarse = single_run(ws, half, method);
  if (full.is_zero || coarse.is_zero) {
    full.converged = full.is_zero == coarse.is_zero;
    return full;
  }
  full.precision_delta = std::abs(full.log_abs - coarse.log_abs);
  const double phase_delta = std::abs(wrap(full.phase - coarse.phase));
  full.converged = full.precision_delta < 1e-8 && phase_delta < 1e-8;
  return full;
}

LogDetRatio log_det_ratio(const WeightSpec& num, const WeightSpec& den, mp::Precision bits) {
  if (num.n != den.n) throw DomainError("log_det_ratio: weights must share n");
  const HankelResult b = oracle_log_det(den, bits);
  if (b.is_zero) throw DomainError("log_det_ratio: denominator determinant vanishes");
  const HankelResult a = oracle_log_det(num, bits);
  LogDetRatio r;
  if (a.is_zero) {
    r.value = {-std::numeric_limits<double>::infinity(), 0.0};
  } else {
    r.value = {a.log_abs - b.log_abs, wrap(a.phase - b.phase)};
  }
  r.phase_unwrapped = a.phase_unwrapped - b.phase_unwrapped;
  r.converged = a.converged && b.converged;
  return r;
}

McEstimate mc_gap_probability(const ThinningSpec& spec, int n, long samples, std::uint64_t seed,
                              unsigned threads) {
  spec.validate();
  if (n < 1 || n > 50) throw DomainError("mc_gap_probability: n must lie in 1..50");
  if (samples < 10000) throw DomainError("mc_gap_probability: at least 1e4 samples required");

  const long batches = (samples + kMcBatchSize - 1) / kMcBatchSize;
  std::vector<long> hits(static_cast<std::size_t>(batches), 0);
  const double sd_diag = 1.0 / (2.0 * std::sqrt(static_cast<double>(n)));
  const double sd_off = 1.0 / (2.0 * std::sqrt(2.0 * n));

  auto run_batch = [&](long b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> diag(0.0, sd_diag), off(0.0, sd_off);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const long size = std::min(kMcBatchSize, samples - b * kMcBatchSize);
    Eigen::MatrixXcd m(n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(n);
    long count = 0;
    for (long i = 0; i < size; ++i) {
      for (int r = 0; r < n; ++r) {
        m(r, r) = diag(rng);
        for (int c = r + 1; c < n; ++c) {
          const double re = off(rng), im = off(rng);
          m(r, c) = {re, im};
          m(c, r) = {re, -im};
        }
      }
      solver.compute(m, Eigen::EigenvaluesOnly);
      bool gap = true;
      for (int e = 0; e < n; ++e) {
        const double lambda = solver.eigenvalues()[e];
        int sector = 1;
        for (double t : spec.boundaries) sector += lambda > t ? 1 : 0;
        const auto it = spec.s.find(sector);
        // draw for every eigenvalue so the stream does not depend on the outcome
        const double u = unif(rng);
        if (it != spec.s.end() && !(u < it->second)) gap = false;
      }
      count += gap ? 1 : 0;
    }
    hits[static_cast<std::size_t>(b)] = count;
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<long>(workers, batches));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long b = next++; b < batches; b = next++) run_batch(b);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  long total = 0;
  for (long h : hits) total += h;
  McEstimate out;
  out.samples = samples;
  out.estimate = static_cast<double>(total) / static_cast<double>(samples);
  out.standard_error =
      std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

}  // namespace hankel_fh::oracle
