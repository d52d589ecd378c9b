#include "symtrace/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "symtrace/angular.hpp"

namespace symtrace {

namespace {

using cplx = std::complex<long double>;
using Integrand = std::function<cplx(long double)>;

// Gauss7/Kronrod15 pair; the Gauss nodes are the odd-indexed Kronrod ones.
constexpr long double kNodes[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.0L};
constexpr long double kWeights[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
constexpr long double kGaussWeights[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

struct PanelEstimate {
  cplx kronrod;
  long double err;
};

PanelEstimate gk_panel(const Integrand& f, long double a, long double b) {
  long double h = (b - a) / 2;
  long double c = (a + b) / 2;
  cplx fc = f(c);
  cplx k15 = kWeights[7] * fc;
  cplx g7 = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    cplx lo = f(c - h * kNodes[i]);
    cplx hi = f(c + h * kNodes[i]);
    k15 += kWeights[i] * (lo + hi);
    if (i % 2 == 1) g7 += kGaussWeights[i / 2] * (lo + hi);
  }
  k15 *= h;
  g7 *= h;
  return {k15, std::abs(k15 - g7)};
}

struct QuadAccumulator {
  cplx value = 0;
  long double err = 0;
  long panels = 0;
};

// Deterministic left-first adaptive bisection; error budget halves per split.
void gk_adaptive(const Integrand& f, long double a, long double b,
                 long double tol, int depth, QuadAccumulator& acc) {
  if (acc.panels > 60000)
    fail(ErrorKind::Quadrature,
         "quadrature panel budget exhausted before reaching tolerance");
  ++acc.panels;
  PanelEstimate p = gk_panel(f, a, b);
  if (p.err <= tol || depth >= 52) {
    if (depth >= 52 && p.err > tol * 64)
      fail(ErrorKind::Quadrature,
           "quadrature did not converge at the requested tolerance");
    acc.value += p.kronrod;
    acc.err += p.err;
    return;
  }
  long double mid = a + (b - a) / 2;
  gk_adaptive(f, a, mid, tol / 2, depth + 1, acc);
  gk_adaptive(f, mid, b, tol / 2, depth + 1, acc);
}

// Integral over [0, infinity) with the extension breakpoint at r = 1 kept as
// a panel boundary; the far field is mapped to (0, 1] by r = v^{-s} with s
// large enough that the integrand vanishes to second order at v = 0.
QuadAccumulator integrate_radial(const Integrand& f, long double decay_eps,
                                 long double tol) {
  int svar = static_cast<int>(std::ceil(3.0L / std::max(decay_eps, 0.01L)));
  svar = std::clamp(svar, 1, 64);
  QuadAccumulator acc;
  gk_adaptive(f, 0.0L, 1.0L, tol / 2, 0, acc);
  Integrand far = [&f, svar](long double v) -> cplx {
    if (v <= 0.0L) return 0;
    long double r = powl(v, static_cast<long double>(-svar));
    return f(r) * static_cast<long double>(svar) * powl(v, -svar - 1.0L);
  };
  gk_adaptive(far, 0.0L, 1.0L, tol / 2, 0, acc);
  return acc;
}

cplx resolvent_power(long double p_val, cplx lam, unsigned N) {
  cplx inv = 1.0L / (cplx(p_val) - lam);
  cplx out = 1;
  for (unsigned i = 0; i < N; ++i) out *= inv;
  return out;
}

bool is_radial(const ClassicalSymbol& s) {
  for (const auto& term : s.terms())
    for (const auto& part : term.parts)
      for (const auto& q : part.angular.diag) {
        Rat c;
        if (!q.sphere_canonical().is_constant(&c)) return false;
      }
  return true;
}

// Per-channel radial reduction of a classical symbol: exact sphere moments
// per term, leaving only the radial profile r^{d} (r^{d+K} inside the ball).
struct MomentTerm {
  long double deg_out;
  long double deg_in;
  long double coef;
};

std::vector<std::vector<MomentTerm>> moment_profile(const ClassicalSymbol& a) {
  std::vector<std::vector<MomentTerm>> prof(a.M());
  for (int ch = 0; ch < a.M(); ++ch) {
    for (const auto& term : a.terms()) {
      ScalarValue mom = ScalarValue::zero();
      for (const auto& part : term.parts) {
        const RatPoly& q =
            part.angular.diag[part.angular.diag.size() == 1 ? 0 : ch];
        mom = mom + part.scale * sphere_moment(q, a.n());
      }
      long double c = static_cast<long double>(mom.value().to_double());
      if (c == 0.0L) continue;
      long double d = static_cast<long double>(term.degree.get_d());
      prof[ch].push_back({d, d + static_cast<long double>(term.K), c});
    }
  }
  return prof;
}

long double profile_eval(const std::vector<MomentTerm>& terms, long double r) {
  long double s = 0;
  for (const auto& t : terms)
    s += t.coef * powl(r, r <= 1.0L ? t.deg_in : t.deg_out);
  return s;
}

// Fixed sphere quadrature: exact point pair at n = 1, periodic trapezoid at
// n = 2, Gauss-Legendre x trapezoid product at n = 3.
struct SphereRule {
  std::vector<std::vector<long double>> nodes;
  std::vector<long double> weights;
};

void gauss_legendre(int k, std::vector<long double>& x,
                    std::vector<long double>& w) {
  x.assign(k, 0);
  w.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    long double t = cosl(3.14159265358979323846264338327950L * (i + 0.75L) /
                         (k + 0.5L));
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = t;
      for (int j = 2; j <= k; ++j) {
        long double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      long double dp = k * (t * p1 - p0) / (t * t - 1);
      long double step = p1 / dp;
      t -= step;
      if (fabsl(step) < 1e-19L) break;
    }
    long double p0 = 1, p1 = t;
    for (int j = 2; j <= k; ++j) {
      long double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    long double dp = k * (t * p1 - p0) / (t * t - 1);
    x[i] = t;
    w[i] = 2.0L / ((1 - t * t) * dp * dp);
  }
}

SphereRule sphere_rule(int n, unsigned azimuth_points) {
  constexpr long double kPi = 3.14159265358979323846264338327950L;
  SphereRule rule;
  if (n == 1) {
    rule.nodes = {{1.0L}, {-1.0L}};
    rule.weights = {1.0L, 1.0L};
    return rule;
  }
  if (n == 2) {
    for (unsigned q = 0; q < azimuth_points; ++q) {
      long double phi = 2 * kPi * q / azimuth_points;
      rule.nodes.push_back({cosl(phi), sinl(phi)});
      rule.weights.push_back(2 * kPi / azimuth_points);
    }
    return rule;
  }
  std::vector<long double> gx, gw;
  gauss_legendre(24, gx, gw);
  for (size_t i = 0; i < gx.size(); ++i) {
    long double su = sqrtl(std::max(0.0L, 1 - gx[i] * gx[i]));
    for (unsigned q = 0; q < azimuth_points; ++q) {
      long double phi = 2 * kPi * q / azimuth_points;
      rule.nodes.push_back({su * cosl(phi), su * sinl(phi), gx[i]});
      rule.weights.push_back(gw[i] * 2 * kPi / azimuth_points);
    }
  }
  return rule;
}

long double dbar_factor(int n) {
  long double f = 1;
  for (int i = 0; i < n; ++i) f /= 2 * 3.14159265358979323846264338327950L;
  return f;
}

void check_trace_class(const ClassicalSymbol& a, const ClassicalSymbol& p,
                       unsigned N) {
  if (a.n() != p.n() || a.M() != p.M())
    fail(ErrorKind::Domain, "symbols disagree in dimension or channel count");
  if (a.n() > 3)
    fail(ErrorKind::Domain, "numeric quadrature supports dimensions up to 3");
  if (N < 1) fail(ErrorKind::Domain, "resolvent power must be at least 1");
  if (p.empty()) fail(ErrorKind::Domain, "weight symbol is empty");
  Rat decay = a.sigma() - Rat(static_cast<long>(N)) * p.sigma() + Rat(a.n());
  if (!a.empty() && decay >= 0)
    fail(ErrorKind::Domain,
         "trace integrand does not decay: need order - N*m < -n");
}

}  // namespace

std::complex<long double> numeric_trace_ray(const ClassicalSymbol& a,
                                            const ClassicalSymbol& p,
                                            unsigned N, long double t,
                                            double theta, long double tol) {
  check_trace_class(a, p, N);
  if (a.empty()) return 0;
  if (!(t > 0)) fail(ErrorKind::Domain, "ray magnitude must be positive");
  if (!(std::fabs(theta) < 3.14159265358979))
    fail(ErrorKind::Domain, "ray angle must avoid the positive real axis");

  const int n = a.n();
  const int M = a.M();
  cplx lam = -t * cplx(cosl((long double)theta), sinl((long double)theta));
  Rat decay_rat =
      Rat(static_cast<long>(N)) * p.sigma() - a.sigma() - Rat(a.n());
  long double eps = static_cast<long double>(decay_rat.get_d());

  QuadAccumulator acc;
  if (is_radial(p)) {
    auto prof = moment_profile(a);
    Integrand f = [&](long double r) -> cplx {
      std::vector<long double> e1(n, 0.0L);
      e1[0] = 1.0L;
      cplx s = 0;
      for (int ch = 0; ch < M; ++ch) {
        long double am = profile_eval(prof[ch], r);
        if (am == 0.0L) continue;
        s += am * resolvent_power(p.eval_channel(ch, r, e1), lam, N);
      }
      return s * powl(r, n - 1);
    };
    acc = integrate_radial(f, eps, tol);
  } else {
    unsigned q_points = 64;
    QuadAccumulator prev;
    for (int round = 0;; ++round) {
      SphereRule rule = sphere_rule(n, q_points);
      Integrand f = [&](long double r) -> cplx {
        cplx s = 0;
        for (size_t q = 0; q < rule.nodes.size(); ++q) {
          cplx at = 0;
          for (int ch = 0; ch < M; ++ch)
            at += a.eval_channel(ch, r, rule.nodes[q]) *
                  resolvent_power(p.eval_channel(ch, r, rule.nodes[q]), lam, N);
          s += rule.weights[q] * at;
        }
        return s * powl(r, n - 1);
      };
      acc = QuadAccumulator{};
      gk_adaptive(f, 0.0L, 1.0L, tol / 2, 0, acc);
      Integrand far = [&](long double v) -> cplx {
        if (v <= 0.0L) return 0;
        int svar = static_cast<int>(
            std::clamp(std::ceil(3.0L / std::max(eps, 0.01L)), 1.0L, 64.0L));
        long double r = powl(v, static_cast<long double>(-svar));
        return f(r) * static_cast<long double>(svar) * powl(v, -svar - 1.0L);
      };
      gk_adaptive(far, 0.0L, 1.0L, tol / 2, 0, acc);
      if (round > 0 && std::abs(acc.value - prev.value) <=
                           16 * tol + 1e-15L * std::abs(acc.value))
        break;
      if (q_points >= 1024)
        fail(ErrorKind::Quadrature,
             "sphere quadrature did not stabilize under refinement");
      prev = acc;
      q_points *= 2;
    }
  }
  return acc.value * dbar_factor(n);
}

ScalarValue numeric_trace(const ClassicalSymbol& a, const ClassicalSymbol& p,
                          unsigned N, double lambda) {
  if (!(lambda < 0))
    fail(ErrorKind::Domain, "real-axis trace needs lambda < 0");
  long double tol = 1e-12L;
  cplx v = numeric_trace_ray(a, p, N, (long double)(-lambda), 0.0, tol);
  long double err = tol * 4 + fabsl(v.imag()) + 1e-17L * fabsl(v.real());
  return ScalarValue::numeric(BigFloat(static_cast<double>(v.real())),
                              BigFloat(static_cast<double>(err)));
}

namespace {

long double channel_abs_sum(const HomogeneousTerm& term) {
  long double s = 0;
  for (const auto& part : term.parts) {
    long double sc = fabsl((long double)part.scale.value().to_double());
    long double poly = 0;
    for (const auto& q : part.angular.diag)
      poly += (long double)q.coeff_abs_sum().get_d();
    s += sc * poly;
  }
  return s;
}

long double lattice_point_value(const ClassicalSymbol& a,
                                const ClassicalSymbol& p, unsigned N,
                                long double t,
                                const std::vector<long>& k) {
  const int n = a.n();
  long double r2 = 0;
  for (long ki : k) r2 += (long double)ki * ki;
  long double r = sqrtl(r2);
  std::vector<long double> omega(n, 0.0L);
  if (r > 0)
    for (int i = 0; i < n; ++i) omega[i] = k[i] / r;
  else
    omega[0] = 1.0L;  // realized symbols at the origin read along e1
  long double s = 0;
  for (int ch = 0; ch < a.M(); ++ch) {
    long double av = a.eval_channel(ch, r, omega);
    if (av == 0.0L) continue;
    long double den = p.eval_channel(ch, r, omega) + t;
    long double inv = 1.0L / den;
    long double res = 1;
    for (unsigned i = 0; i < N; ++i) res *= inv;
    s += av * res;
  }
  return s;
}

// Walk the boundary of the centered cube of half-width s in a fixed order.
template <typename Fn>
void for_each_shell_point(int n, long s, Fn&& fn) {
  std::vector<long> k(n, 0);
  if (s == 0) {
    fn(k);
    return;
  }
  if (n == 1) {
    k[0] = -s;
    fn(k);
    k[0] = s;
    fn(k);
    return;
  }
  if (n == 2) {
    for (long x : {-s, s})
      for (long y = -s; y <= s; ++y) {
        k[0] = x;
        k[1] = y;
        fn(k);
      }
    for (long x = -s + 1; x <= s - 1; ++x)
      for (long y : {-s, s}) {
        k[0] = x;
        k[1] = y;
        fn(k);
      }
    return;
  }
  for (long x : {-s, s})
    for (long y = -s; y <= s; ++y)
      for (long z = -s; z <= s; ++z) {
        k = {x, y, z};
        fn(k);
      }
  for (long x = -s + 1; x <= s - 1; ++x) {
    for (long y : {-s, s})
      for (long z = -s; z <= s; ++z) {
        k = {x, y, z};
        fn(k);
      }
    for (long y = -s + 1; y <= s - 1; ++y)
      for (long z : {-s, s}) {
        k = {x, y, z};
        fn(k);
      }
  }
}

}  // namespace

ScalarValue lattice_trace(const ClassicalSymbol& a, const ClassicalSymbol& p,
                          unsigned N, double lambda, double tol) {
  check_trace_class(a, p, N);
  if (!(lambda < 0)) fail(ErrorKind::Domain, "lattice sum needs lambda < 0");
  if (!(tol > 0)) fail(ErrorKind::Domain, "tolerance must be positive");
  const int n = a.n();
  long double t = (long double)(-lambda);
  if (a.empty()) return ScalarValue::zero();

  // Tail constants: |a| <= Ca r^sigma and p >= (c/2) r^m past the radius
  // where the leading radial term dominates the coefficient mass below it.
  Rat c_lead = radial_leading_coefficient(p);
  long double c = (long double)c_lead.get_d();
  long double m = (long double)p.sigma().get_d();
  long double sigma_a = (long double)a.sigma().get_d();
  long double ca = 0;
  for (const auto& term : a.terms()) ca += channel_abs_sum(term);
  long double cl = 0;
  long double gap = m;
  bool first = true;
  for (const auto& term : p.terms()) {
    if (first) {
      first = false;
      continue;
    }
    cl += channel_abs_sum(term);
    gap = std::min(gap, m - (long double)term.degree.get_d());
  }
  long double r_dominant =
      cl > 0 ? powl(2 * cl / c, 1.0L / std::max(gap, 0.25L)) : 1.0L;

  long double beta = n - 1 + sigma_a - (long double)N * m;
  long double coef = 2.0L * n * powl(3.0L, n - 1) * ca *
                     powl((long double)n, std::max(sigma_a, 0.0L) / 2) *
                     powl(2.0L / c, (long double)N);
  auto tail_bound = [&](long double s0) {
    return coef * powl(s0 - 1, beta + 1) / (-beta - 1);
  };

  long double sum = 0;
  long points = 0;
  long s = 0;
  for (;; ++s) {
    if (points > 40000000)
      fail(ErrorKind::Quadrature,
           "lattice tail bound not achievable at the requested tolerance");
    for_each_shell_point(n, s, [&](const std::vector<long>& k) {
      sum += lattice_point_value(a, p, N, t, k);
      ++points;
    });
    if (s >= 2 && (long double)s + 1 > r_dominant &&
        tail_bound((long double)s + 1) <= (long double)tol)
      break;
  }
  long double norm = dbar_factor(n);
  long double err =
      tail_bound((long double)s + 1) + 1e-16L * fabsl(sum) * (s + 1);
  return ScalarValue::numeric(BigFloat(static_cast<double>(sum * norm)),
                              BigFloat(static_cast<double>(err * norm)));
}

std::vector<TraceSample> sample_ray(const ClassicalSymbol& a,
                                    const ClassicalSymbol& p, unsigned N,
                                    const RaySampler& sampler,
                                    unsigned ladder_size) {
  unsigned S = sampler.S != 0 ? sampler.S : ladder_size + 4;
  if (S < ladder_size + 2)
    fail(ErrorKind::Domain, "need at least two samples beyond the ladder");
  if (!(sampler.t0 >= 2.0L))
    fail(ErrorKind::Domain, "ladder must start at magnitude 2 or beyond");
  if (!(sampler.rho > 1.0L))
    fail(ErrorKind::Domain, "ladder ratio must exceed 1");
  std::vector<TraceSample> out;
  long double t = sampler.t0;
  for (unsigned i = 0; i < S; ++i) {
    out.push_back({t, numeric_trace_ray(a, p, N, t, sampler.theta,
                                        sampler.tol)});
    t *= sampler.rho;
  }
  return out;
}

FitReport fit_expansion(const std::vector<TraceSample>& samples, double theta,
                        const std::vector<LadderSlot>& ladder) {
  const size_t J = ladder.size();
  const size_t S = samples.size();
  if (J == 0) fail(ErrorKind::Domain, "empty fit ladder");
  if (S < J + 2)
    fail(ErrorKind::Domain, "need at least two samples beyond the ladder");
  {
    std::set<std::pair<Rat, unsigned>, std::less<>> seen;
    for (const auto& slot : ladder)
      if (!seen.insert({slot.exponent, slot.log_power}).second)
        fail(ErrorKind::Domain, "fit ladder slots must be distinct");
  }

  using MatX = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using VecX = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  MatX A(2 * S, J);
  VecX b(2 * S);
  const long double th = (long double)theta;
  for (size_t i = 0; i < S; ++i) {
    long double t = samples[i].t;
    cplx y = samples[i].value;
    long double w = 1.0L / std::max(std::abs(y), 1e-280L);
    cplx loglam(logl(t), th);
    for (size_t j = 0; j < J; ++j) {
      long double alpha = (long double)ladder[j].exponent.get_d();
      cplx basis = powl(t, alpha) *
                   cplx(cosl(alpha * th), sinl(alpha * th));
      for (unsigned l = 0; l < ladder[j].log_power; ++l) basis *= loglam;
      A(2 * i, j) = basis.real() * w;
      A(2 * i + 1, j) = basis.imag() * w;
    }
    b(2 * i) = y.real() * w;
    b(2 * i + 1) = y.imag() * w;
  }

  VecX colnorm(J);
  for (size_t j = 0; j < J; ++j) {
    long double nj = A.col(j).norm();
    colnorm(j) = nj > 0 ? nj : 1.0L;
    A.col(j) /= colnorm(j);
  }
  Eigen::ColPivHouseholderQR<MatX> qr(A);
  VecX z = qr.solve(b);
  long double rfirst = fabsl(qr.matrixR()(0, 0));
  long double rlast = fabsl(qr.matrixR()(J - 1, J - 1));
  long double cond = rlast > 0 ? rfirst / rlast : 1e300L;
  long double residual = (A * z - b).norm();

  FitReport report;
  report.condition = static_cast<double>(cond);
  report.residual = static_cast<double>(residual);
  report.ok = cond < 1e10L;
  for (size_t j = 0; j < J; ++j) {
    FitRow row;
    row.exponent = ladder[j].exponent;
    row.log_power = ladder[j].log_power;
    row.fitted = static_cast<double>(z(j) / colnorm(j));
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<LadderSlot> fit_ladder(const AsymptoticExpansion& e) {
  std::vector<LadderSlot> out;
  for (const auto& [key, row] : e.rows())
    if (!row.value.is_zero()) out.push_back({key.first, key.second});
  std::reverse(out.begin(), out.end());
  return out;
}

void attach_reference(FitReport& report, const AsymptoticExpansion& e,
                      double rel_tol) {
  for (FitRow& row : report.rows) {
    double sym = e.coeff(row.exponent, row.log_power).value().to_double();
    row.has_symbolic = true;
    row.symbolic = sym;
    row.rel_error = sym != 0.0 ? std::fabs(row.fitted - sym) / std::fabs(sym)
                               : std::fabs(row.fitted);
    row.verdict = row.rel_error <= rel_tol ? "ok" : "mismatch";
  }
}

ScalarValue fit_radius_constant(const ClassicalSymbol& a) {
  if (a.empty()) return ScalarValue::zero();
  const int n = a.n();
  if (n > 3)
    fail(ErrorKind::Domain, "numeric quadrature supports dimensions up to 3");
  const int M = a.M();

  // The angular data is polynomial, so a fixed product rule integrates the
  // sphere average exactly; only the radial direction is approximated.
  int maxdeg = 0;
  for (const auto& term : a.terms())
    for (const auto& part : term.parts)
      for (const auto& q : part.angular.diag)
        maxdeg = std::max(maxdeg, q.degree());
  SphereRule rule = sphere_rule(n, static_cast<unsigned>(2 * maxdeg + 8));

  Integrand f = [&](long double r) -> cplx {
    long double s = 0;
    for (size_t q = 0; q < rule.nodes.size(); ++q) {
      long double at = 0;
      for (int ch = 0; ch < M; ++ch)
        at += a.eval_channel(ch, r, rule.nodes[q]);
      s += rule.weights[q] * at;
    }
    return s * powl(r, n - 1);
  };

  // Ladder slots from the exact degree grid: R^{d+n} rows, a log row at
  // d = -n, and the constant row being extracted.
  std::set<Rat, RatLess> degrees;
  for (const auto& term : a.terms()) degrees.insert(term.degree + Rat(n));
  std::vector<LadderSlot> ladder;
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
    if (*it == 0)
      ladder.push_back({Rat(0), 1});
    else
      ladder.push_back({*it, 0});
  }
  ladder.push_back({Rat(0), 0});

  unsigned S = static_cast<unsigned>(ladder.size()) + 5;
  std::vector<TraceSample> samples;
  long double tol = 1e-12L;
  QuadAccumulator acc;
  gk_adaptive(f, 0.0L, 1.0L, tol, 0, acc);
  long double r_prev = 1.0L;
  long double radius = 4.0L;
  for (unsigned i = 0; i < S; ++i) {
    gk_adaptive(f, r_prev, radius, tol, 0, acc);
    samples.push_back({radius, acc.value * dbar_factor(n)});
    r_prev = radius;
    radius *= 2.0L;
  }

  FitReport report = fit_expansion(samples, 0.0, ladder);
  if (!report.ok)
    fail(ErrorKind::Conditioning, "radius ladder fit is ill-conditioned");
  double constant = 0;
  for (const FitRow& row : report.rows)
    if (row.exponent == 0 && row.log_power == 0) constant = row.fitted;
  double err = std::max(report.residual * 4.0, 1e-12);
  return ScalarValue::numeric(BigFloat(constant), BigFloat(err));
}

}  // namespace symtrace
