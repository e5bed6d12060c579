#include "torsionlab/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <boost/math/special_functions/digamma.hpp>

#include "torsionlab/errors.hpp"
#include "torsionlab/kahan.hpp"

namespace torsionlab::specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Euler–Maclaurin parameters for the zeta continuations. The direct sum stops at the first n + a ≥ kEmStart:
// the remainder is below 2|(s)_{2K−1}|/(2π x)^{2K} relative to x^{1−s}, and a larger x only adds cancellation
// of order eps·x^{1−s} when s < 0.
constexpr double kEmStart = 6.0;
constexpr int kEmTerms = 10;

// B_{2k} / (2k)!, k = 1..10.
constexpr std::array<double, kEmTerms> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

// Beyond this argument the unscaled I_ν overflows for small orders.
constexpr double kDirectIMaxArg = 700.0;
// Smallest unscaled I value trusted from the direct evaluation.
constexpr double kDirectIMinValue = 1e-280;

void require_order_arg(double nu, double x, const char* who) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw DomainError(std::string(who) + ": order must be finite and >= 0");
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": argument must be finite and >= 0");
  }
}

bool is_half_integer(double nu, int* k) {
  const double t = nu - 0.5;
  if (t < 0.0 || t != std::floor(t) || t > 64.0) return false;
  *k = static_cast<int>(t);
  return true;
}

// Π_{i=0}^{m-1} (s+i) and its s-derivative.
void pochhammer_with_derivative(double s, int m, double* value, double* derivative) {
  double v = 1.0;
  for (int i = 0; i < m; ++i) v *= s + i;
  double d = 0.0;
  for (int i = 0; i < m; ++i) {
    double prod = 1.0;
    for (int j = 0; j < m; ++j) {
      if (j != i) prod *= s + j;
    }
    d += prod;
  }
  *value = v;
  *derivative = d;
}

// log I_ν(x) from the uniform large-order expansion; needs ν > 0.
double log_i_debye(double nu, double x) {
  const auto& u = debye_polynomials();
  const double z = x / nu;
  const double root = std::sqrt(1.0 + z * z);
  const double t = 1.0 / root;
  const double eta = root + std::log(z / (1.0 + root));
  KahanSum series;
  double nu_pow = 1.0;
  for (const auto& poly : u) {
    double p = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) p = p * t + *it;
    series += p / nu_pow;
    nu_pow *= nu;
  }
  return nu * eta - 0.5 * std::log(2.0 * kPi * nu) + 0.5 * std::log(t) + std::log(series.value());
}

// log I_ν(x) from the large-argument expansion; intended for x ≫ ν².
double log_i_hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  KahanSum series;
  series += 1.0;
  double term = 1.0;
  double prev = kInf;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(term) >= prev) break;
    series += term;
    prev = std::abs(term);
    if (prev < 1e-18) break;
  }
  return x - 0.5 * std::log(2.0 * kPi * x) + std::log(series.value());
}

// log I_ν(x) from the ascending series written in log form; for tiny x.
double log_i_small(double nu, double x) {
  const double q = 0.25 * x * x;
  KahanSum series;
  double term = 1.0;
  series += term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (k * (nu + k));
    series += term;
    if (term < 1e-18 * series.value()) break;
  }
  return nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) + std::log(series.value());
}

double log_i_any(double nu, double x) {
  if (x <= kDirectIMaxArg) {
    const double v = boost::math::cyl_bessel_i(nu, x);
    if (std::isfinite(v) && v > kDirectIMinValue) return std::log(v);
  }
  if (x < 1.0) return log_i_small(nu, x);
  if (nu >= 8.0) return log_i_debye(nu, x);
  return log_i_hankel(nu, x);
}

double log_i_prime_any(double nu, double x) {
  if (x <= kDirectIMaxArg) {
    const double v = boost::math::cyl_bessel_i_prime(nu, x);
    if (std::isfinite(v) && v > kDirectIMinValue) return std::log(v);
  }
  // I'_ν = I_{ν+1} + (ν/x) I_ν, a sum of positive terms.
  const double a = log_i_any(nu + 1.0, x);
  const double b = log_i_any(nu, x);
  return a + std::log1p((nu / x) * std::exp(b - a));
}

std::string describe(const ZeroFamily& f) {
  std::ostringstream os;
  os.precision(17);
  os << to_string(f.kind) << "(order=" << f.order << ")";
  return os.str();
}

// Safeguarded Newton inside a sign-change bracket [a, b].
double refine_root(const ZeroFamily& fam, double a, double b, double fa, double fb) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  double x = 0.5 * (a + b);
  for (int iter = 0; iter < 200; ++iter) {
    const double fx = family_function(fam, x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
    }
    const double d = family_function_derivative(fam, x);
    double next = x - fx / d;
    if (!(next > a && next < b) || !std::isfinite(next)) next = 0.5 * (a + b);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, x) || b - a <= 1e-15 * std::max(1.0, x)) {
      return x;
    }
  }
  std::ostringstream os;
  os.precision(17);
  os << "zero refinement did not converge for " << describe(fam) << " in bracket [" << a << ", " << b << "]";
  throw ConvergenceError(os.str());
}

// Confirms that the family function changes sign across x.
void verify_sign_change(const ZeroFamily& fam, double x) {
  const double delta = 1e-9 * std::max(1.0, x);
  const double lo = family_function(fam, x - delta);
  const double hi = family_function(fam, x + delta);
  if (lo == 0.0 || hi == 0.0) return;
  if ((lo < 0.0) == (hi < 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "no sign change across candidate zero " << x << " of " << describe(fam) << " (bracket [" << x - delta
       << ", " << x + delta << "])";
    throw ConvergenceError(os.str());
  }
}

constexpr double kScanStep = 0.5;
// Consecutive zeros of every family are further apart than this.
constexpr double kMinZeroGap = 2.0;

// Scans [from, limit) for the next sign change and refines it; returns NaN if none.
double next_zero(const ZeroFamily& fam, double from, double limit) {
  double a = from;
  double fa = family_function(fam, a);
  while (a < limit) {
    const double b = a + kScanStep;
    const double fb = family_function(fam, b);
    if (fa != 0.0 && fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      const double r = refine_root(fam, a, b, fa, fb);
      verify_sign_change(fam, r);
      return r;
    }
    if (fb == 0.0 && fa != 0.0) {
      return b;
    }
    a = b;
    if (fb != 0.0) fa = fb;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

void require_family(const ZeroFamily& f) {
  if (!(f.order >= 0.0) || !std::isfinite(f.order)) {
    throw DomainError("zero family order must be finite and >= 0");
  }
}

// McMahon-type estimate of the k-th zero for k large against the order.
double mcmahon_guess(const ZeroFamily& f, int k) {
  const double nu = f.order;
  const double m = 4.0 * nu * nu;
  if (f.kind == ZeroKind::JZero) {
    const double beta = (k + 0.5 * nu - 0.25) * kPi;
    return beta - (m - 1.0) / (8.0 * beta) - 4.0 * (m - 1.0) * (7.0 * m - 31.0) / (3.0 * std::pow(8.0 * beta, 3));
  }
  const double beta = (k + 0.5 * nu - 0.75) * kPi;
  return beta - (m + 3.0) / (8.0 * beta) - 4.0 * (7.0 * m * m + 82.0 * m - 9.0) / (3.0 * std::pow(8.0 * beta, 3));
}

bool mcmahon_applies(const ZeroFamily& f, int k) {
  if (k <= std::max(50.0, 3.0 * f.order)) return false;
  switch (f.kind) {
    case ZeroKind::JZero:
    case ZeroKind::GPlusZero:
      return true;
    case ZeroKind::JPrimeZero:
      return f.order > 0.0;
    case ZeroKind::GMinusZero:
      return f.order >= 0.5;
  }
  return false;
}

}  // namespace

double gamma_ln(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma_ln: argument must be > 0");
  return std::lgamma(x);
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("digamma: argument must be > 0");
  return boost::math::digamma(x);
}

ZetaValue hurwitz_zeta_with_derivative(double s, double a) {
  if (s == 1.0) throw PoleError("zeta: pole at s = 1");
  if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(s)) throw DomainError("hurwitz_zeta: need finite s and a > 0");
  KahanSum value;
  KahanSum deriv;
  const int cutoff = a >= kEmStart ? 0 : static_cast<int>(std::ceil(kEmStart - a));
  for (int n = 0; n < cutoff; ++n) {
    const double base = n + a;
    const double lb = std::log(base);
    const double p = std::exp(-s * lb);
    value += p;
    deriv += -lb * p;
  }
  const double x = cutoff + a;
  const double lx = std::log(x);
  const double xs = std::exp(-s * lx);
  // Tail integral x^{1-s}/(s-1) and the half end-point term.
  value += x * xs / (s - 1.0);
  deriv += x * xs * (-lx / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0)));
  value += 0.5 * xs;
  deriv += -0.5 * lx * xs;
  double xpow = xs / x;  // x^{-s-1}
  for (int k = 1; k <= kEmTerms; ++k) {
    double poch = 0.0;
    double dpoch = 0.0;
    pochhammer_with_derivative(s, 2 * k - 1, &poch, &dpoch);
    const double c = kBernoulliOverFactorial[k - 1];
    value += c * poch * xpow;
    deriv += c * (dpoch - poch * lx) * xpow;
    xpow /= x * x;
  }
  return {value.value(), deriv.value()};
}

double hurwitz_zeta(double s, double a) { return hurwitz_zeta_with_derivative(s, a).value; }

ZetaValue riemann_zeta(double s, bool with_derivative) {
  ZetaValue v = hurwitz_zeta_with_derivative(s, 1.0);
  if (!with_derivative) v.derivative = 0.0;
  return v;
}

double bessel_j_series(double nu, double x) {
  require_order_arg(nu, x, "bessel_j_series");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double q = 0.25 * x * x;
  double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
  KahanSum sum;
  sum += term;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (k * (nu + k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum.value()) && k > 0.5 * x) break;
  }
  return sum.value();
}

double bessel_j_half_integer(int n, double x) {
  if (n < 0) throw DomainError("bessel_j_half_integer: index must be >= 0");
  if (!(x > 0.0)) {
    if (x == 0.0) return 0.0;
    throw DomainError("bessel_j_half_integer: argument must be >= 0");
  }
  // Rayleigh-type closed form of the spherical Bessel function j_n.
  KahanSum p;
  KahanSum q;
  for (int m = 0; 2 * m <= n; ++m) {
    const double c = std::exp(std::lgamma(n + 2.0 * m + 1.0) - std::lgamma(2.0 * m + 1.0) - std::lgamma(n - 2.0 * m + 1.0));
    p += ((m % 2) ? -c : c) / std::pow(2.0 * x, 2 * m);
  }
  for (int m = 0; 2 * m + 1 <= n; ++m) {
    const double c =
        std::exp(std::lgamma(n + 2.0 * m + 2.0) - std::lgamma(2.0 * m + 2.0) - std::lgamma(n - 2.0 * m));
    q += ((m % 2) ? -c : c) / std::pow(2.0 * x, 2 * m + 1);
  }
  const double phase = x - 0.5 * n * kPi;
  const double jn = (std::sin(phase) * p.value() + std::cos(phase) * q.value()) / x;
  return std::sqrt(2.0 * x / kPi) * jn;
}

double bessel_i_half_integer(int n, double x) {
  if (n < 0) throw DomainError("bessel_i_half_integer: index must be >= 0");
  if (!(x > 0.0)) {
    if (x == 0.0) return 0.0;
    throw DomainError("bessel_i_half_integer: argument must be >= 0");
  }
  KahanSum grow;
  KahanSum decay;
  for (int k = 0; k <= n; ++k) {
    const double c = std::exp(std::lgamma(n + k + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
                     std::pow(2.0 * x, k);
    grow += (k % 2) ? -c : c;
    decay += c;
  }
  const double sign = (n % 2) ? 1.0 : -1.0;  // (-1)^{n+1}
  return (std::exp(x) * grow.value() + sign * std::exp(-x) * decay.value()) / std::sqrt(2.0 * kPi * x);
}

double bessel_j(double nu, double x, bool derivative) {
  require_order_arg(nu, x, "bessel_j");
  int k = 0;
  if (!derivative && x >= 0.5 && is_half_integer(nu, &k) && k <= 1) return bessel_j_half_integer(k, x);
  if (derivative) {
    if (x == 0.0) {
      if (nu == 0.0 || nu > 1.0) return 0.0;
      if (nu == 1.0) return 0.5;
      throw DomainError("bessel_j: J'_nu(0) is unbounded for 0 < nu < 1");
    }
    return boost::math::cyl_bessel_j_prime(nu, x);
  }
  return boost::math::cyl_bessel_j(nu, x);
}

double bessel_i(double nu, double x, bool derivative) {
  require_order_arg(nu, x, "bessel_i");
  int k = 0;
  try {
    if (!derivative && x >= 0.5 && x <= kDirectIMaxArg && is_half_integer(nu, &k) && k <= 1) {
      return bessel_i_half_integer(k, x);
    }
    if (derivative) {
      if (x == 0.0) {
        if (nu == 0.0 || nu > 1.0) return 0.0;
        if (nu == 1.0) return 0.5;
        throw DomainError("bessel_i: I'_nu(0) is unbounded for 0 < nu < 1");
      }
      const double v = boost::math::cyl_bessel_i_prime(nu, x);
      if (!std::isfinite(v)) throw OverflowError("bessel_i: I'_nu(x) overflows; use log_bessel_i");
      return v;
    }
    const double v = boost::math::cyl_bessel_i(nu, x);
    if (!std::isfinite(v)) throw OverflowError("bessel_i: I_nu(x) overflows; use log_bessel_i");
    return v;
  } catch (const std::overflow_error&) {
    throw OverflowError("bessel_i: value exceeds the representable range; use log_bessel_i");
  }
}

double log_bessel_i(double nu, double x, bool derivative) {
  require_order_arg(nu, x, "log_bessel_i");
  if (x == 0.0) {
    if (!derivative) return nu == 0.0 ? 0.0 : -kInf;
    if (nu == 1.0) return std::log(0.5);
    if (nu > 0.0 && nu < 1.0) return kInf;
    return -kInf;
  }
  return derivative ? log_i_prime_any(nu, x) : log_i_any(nu, x);
}

const std::vector<std::vector<double>>& debye_polynomials() {
  // u_{k+1}(t) = ½t²(1−t²)u_k'(t) + ⅛∫₀ᵗ(1−5s²)u_k(s)ds, u_0 = 1.
  static const std::vector<std::vector<double>> polys = [] {
    constexpr int kCount = 14;
    std::vector<std::vector<double>> u(kCount);
    u[0] = {1.0};
    for (int k = 0; k + 1 < kCount; ++k) {
      const auto& a = u[k];
      std::vector<double> next(a.size() + 3, 0.0);
      for (std::size_t i = 1; i < a.size(); ++i) {
        const double d = i * a[i];  // coefficient of t^{i-1} in u_k'
        next[i + 1] += 0.5 * d;
        next[i + 3] -= 0.5 * d;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        next[i + 1] += 0.125 * a[i] / (i + 1.0);
        next[i + 3] -= 0.125 * 5.0 * a[i] / (i + 3.0);
      }
      u[k + 1] = std::move(next);
    }
    return u;
  }();
  return polys;
}

std::string to_string(ZeroKind kind) {
  switch (kind) {
    case ZeroKind::JZero:
      return "J";
    case ZeroKind::JPrimeZero:
      return "J'";
    case ZeroKind::GPlusZero:
      return "G+";
    case ZeroKind::GMinusZero:
      return "G-";
  }
  return "?";
}

double family_function(const ZeroFamily& f, double x) {
  const double nu = f.order;
  switch (f.kind) {
    case ZeroKind::JZero:
      return bessel_j(nu, x);
    case ZeroKind::JPrimeZero:
      return bessel_j(nu, x, true);
    case ZeroKind::GPlusZero:
      return 0.5 * bessel_j(nu, x) + x * bessel_j(nu, x, true);
    case ZeroKind::GMinusZero:
      return -0.5 * bessel_j(nu, x) + x * bessel_j(nu, x, true);
  }
  return 0.0;
}

double family_function_derivative(const ZeroFamily& f, double x) {
  const double nu = f.order;
  const double j = bessel_j(nu, x);
  const double jp = bessel_j(nu, x, true);
  switch (f.kind) {
    case ZeroKind::JZero:
      return jp;
    case ZeroKind::JPrimeZero:
      return -jp / x - (1.0 - nu * nu / (x * x)) * j;
    case ZeroKind::GPlusZero:
      return 0.5 * jp - (x - nu * nu / x) * j;
    case ZeroKind::GMinusZero:
      return -0.5 * jp - (x - nu * nu / x) * j;
  }
  return 0.0;
}

double zero_lower_bound(const ZeroFamily& f) {
  require_family(f);
  const double nu = f.order;
  switch (f.kind) {
    case ZeroKind::JZero:
      return nu;
    case ZeroKind::JPrimeZero:
      // J'_0 = −J_1 vanishes at the origin; its positive zeros are those of J_1.
      return nu > 0.0 ? nu : 1.0;
    case ZeroKind::GPlusZero:
      // G⁺ = 0 forces xJ'/J = −½ < 0, which first happens beyond j'_{ν,1} > ν.
      return nu;
    case ZeroKind::GMinusZero:
      // xJ'/J ≥ ν − x²/(2(ν+1)(1−x²/ν²)) stays above ½ for x ≤ ν/√2 once ν > 0.62.
      return nu > 0.62 ? nu / std::sqrt(2.0) : 1e-3;
  }
  return 0.0;
}

std::vector<double> zeros_below(const ZeroFamily& f, double bound) {
  require_family(f);
  std::vector<double> out;
  double from = std::max(zero_lower_bound(f), 1e-3);
  while (from < bound) {
    const double r = next_zero(f, from, bound);
    if (std::isnan(r) || r >= bound) break;
    if (!out.empty() && !(r > out.back())) {
      throw ConvergenceError("zeros of " + describe(f) + " not strictly increasing");
    }
    out.push_back(r);
    from = r + (r > 5.0 ? kMinZeroGap : 0.1);
  }
  return out;
}

std::vector<double> zeros(const ZeroFamily& f, int count) {
  require_family(f);
  if (count < 0) throw DomainError("zeros: count must be >= 0");
  std::vector<double> out;
  out.reserve(count);
  double from = std::max(zero_lower_bound(f), 1e-3);
  while (static_cast<int>(out.size()) < count) {
    const double limit = from + 20.0 + f.order;
    const double r = next_zero(f, from, limit);
    if (std::isnan(r)) {
      std::ostringstream os;
      os.precision(17);
      os << "no zero of " << describe(f) << " found in [" << from << ", " << limit << "]";
      throw ConvergenceError(os.str());
    }
    if (!out.empty() && !(r > out.back())) {
      throw ConvergenceError("zeros of " + describe(f) + " not strictly increasing");
    }
    out.push_back(r);
    from = r + (r > 5.0 ? kMinZeroGap : 0.1);
  }
  return out;
}

double zero(const ZeroFamily& f, int k) {
  require_family(f);
  if (k < 1) throw DomainError("zero: index must be >= 1");
  if (mcmahon_applies(f, k)) {
    const double g = mcmahon_guess(f, k);
    const double a = g - 1.0;
    const double b = g + 1.0;
    const double fa = family_function(f, a);
    const double fb = family_function(f, b);
    if ((fa < 0.0) != (fb < 0.0) && fa != 0.0 && fb != 0.0) {
      const double r = refine_root(f, a, b, fa, fb);
      verify_sign_change(f, r);
      return r;
    }
  }
  return zeros(f, k).back();
}

double log_bessel_i_product(double nu, double x, int zero_count) {
  if (!(nu >= 0.0) || !(x > 0.0)) throw DomainError("log_bessel_i_product: need nu >= 0 and x > 0");
  if (zero_count < 1) throw DomainError("log_bessel_i_product: need at least one zero");
  KahanSum acc;
  acc += nu * std::log(0.5 * x) - gamma_ln(nu + 1.0);
  for (double j : zeros({ZeroKind::JZero, nu}, zero_count)) acc += std::log1p(x * x / (j * j));
  return acc.value();
}

std::vector<double> uniform_expansion_coeffs(ExpansionKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("uniform_expansion_coeffs: p must lie in [0, 1]");
  const double p2 = p * p;
  const double p3 = p2 * p;
  const double p4 = p2 * p2;
  const double p6 = p4 * p2;
  switch (kind) {
    case ExpansionKind::I:
      return {p / 8.0 - 5.0 * p3 / 24.0};
    case ExpansionKind::Iprime:
      return {-3.0 * p / 8.0 + 7.0 * p3 / 24.0};
    case ExpansionKind::Hplus:
      return {p / 8.0 + 7.0 * p3 / 24.0, -7.0 * p2 / 128.0 + 79.0 * p4 / 192.0 - 455.0 * p6 / 1152.0};
    case ExpansionKind::Hminus:
      // W₂,₋ = V₂ − ½pU₁; the p² coefficient is −23/128.
      return {-7.0 * p / 8.0 + 7.0 * p3 / 24.0, -23.0 * p2 / 128.0 + 119.0 * p4 / 192.0 - 455.0 * p6 / 1152.0};
  }
  return {};
}

}  // namespace torsionlab::specfun
