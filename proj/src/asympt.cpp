#include "cjp/asympt.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "cjp/error.hpp"

namespace cjp {
namespace {

LaurentPoly quantum_power(int n, int k) {
  const LaurentPoly q = quantum_integer(n);
  LaurentPoly out(1L);
  for (int i = 0; i < k; ++i) out = multiply(out, q);
  return out;
}

double log_abs(const Integer& x) {
  if (sgn(x) == 0) return -INFINITY;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}

std::vector<int> all_colors(const LinkExpr& e, int n) {
  return std::vector<int>(static_cast<std::size_t>(e.component_count()), n);
}

// Evaluates J / [N]^k at A0, dividing exactly where possible. `zero` is set
// when an exact quotient vanishes numerically at A0.
std::complex<double> normalized_value(const LaurentPoly& j, int n, int split_mult, bool& zero) {
  if (split_mult < 1) throw Error(ErrorKind::InvalidArgument, "split multiplicity must be >= 1");
  const RootOfUnityPoint pt(n);
  LaurentPoly value = j;
  for (int k = 0; k < split_mult; ++k) {
    try {
      value = divide_by_quantum_integer(value, n);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotDivisible) throw;
      zero = false;
      return lhospital_limit(value, quantum_power(n, split_mult - k), pt);
    }
  }
  const RootValue v = eval_at_root_scaled(value, pt);
  zero = std::abs(v.value) <= LimitOptions{}.tolerance * v.scale;
  return v.value;
}

}  // namespace

bool vanishes_at(const LaurentPoly& p, const RootOfUnityPoint& pt, double tolerance) {
  if (p.is_zero()) return true;
  const RootValue v = eval_at_root_scaled(p, pt);
  return std::abs(v.value) <= tolerance * v.scale;
}

int vanishing_order(const LaurentPoly& p, const RootOfUnityPoint& pt, const LimitOptions& options) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero polynomial vanishes to every order");
  LaurentPoly current = p;
  for (int order = 0; order <= options.depth_cap; ++order) {
    if (!vanishes_at(current, pt, options.tolerance)) return order;
    current = derivative(current);
  }
  throw Error(ErrorKind::DepthExceeded,
              "still vanishing after " + std::to_string(options.depth_cap) + " derivatives");
}

std::complex<double> lhospital_limit(const LaurentPoly& numerator, const LaurentPoly& denominator,
                                     const RootOfUnityPoint& pt, const LimitOptions& options) {
  if (denominator.is_zero()) throw Error(ErrorKind::InvalidArgument, "denominator is identically zero");
  LaurentPoly num = numerator;
  LaurentPoly den = denominator;
  for (int depth = 0; depth <= options.depth_cap; ++depth) {
    const RootValue d = eval_at_root_scaled(den, pt);
    const bool num_zero = vanishes_at(num, pt, options.tolerance);
    if (std::abs(d.value) > options.tolerance * d.scale)
      return num_zero ? std::complex<double>(0.0, 0.0) : eval_at_root(num, pt) / d.value;
    if (!num_zero)
      throw Error(ErrorKind::DivergentLimit, "denominator vanishes to higher order than the numerator (after " +
                                                 std::to_string(depth) + " derivatives)");
    num = derivative(num);
    den = derivative(den);
  }
  throw Error(ErrorKind::DepthExceeded,
              "denominator still vanishing after " + std::to_string(options.depth_cap) + " derivatives");
}

std::complex<double> eval_normalized_at_root(JonesEngine& engine, const LinkExpr& e, int n, int split_mult) {
  bool zero = false;
  const std::complex<double> v = normalized_value(engine.colored_jones(e, all_colors(e, n)), n, split_mult, zero);
  return zero ? std::complex<double>(0.0, 0.0) : v;
}

std::complex<double> eval_normalized_at_root(const LinkExpr& e, int n, int split_mult) {
  JonesEngine engine;
  return eval_normalized_at_root(engine, e, n, split_mult);
}

std::complex<double> eval_normalized_by_limit(JonesEngine& engine, const LinkExpr& e, int n, int split_mult) {
  if (split_mult < 1) throw Error(ErrorKind::InvalidArgument, "split multiplicity must be >= 1");
  return lhospital_limit(engine.colored_jones(e, all_colors(e, n)), quantum_power(n, split_mult),
                         RootOfUnityPoint(n));
}

GrowthRecord growth_record(JonesEngine& engine, const LinkExpr& e, int n, int split_mult) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "growth records need N >= 2");
  const LaurentPoly j = engine.colored_jones(e, all_colors(e, n));
  GrowthRecord rec;
  rec.n = n;
  if (!j.is_zero()) {
    rec.maxdeg = j.max_degree();
    rec.mindeg = j.min_degree();
  }
  rec.maxabscoeff = j.max_abs_coefficient();
  bool zero = false;
  const std::complex<double> v = normalized_value(j, n, split_mult, zero);
  rec.abs_eval = zero ? 0.0 : std::abs(v);
  if (rec.abs_eval > 0.0) rec.vc_value = 2.0 * std::numbers::pi / n * std::log(rec.abs_eval);
  return rec;
}

std::vector<GrowthRecord> growth_table(JonesEngine& engine, const LinkExpr& e, const std::vector<int>& ns,
                                       int split_mult, unsigned threads) {
  if (ns.empty()) throw Error(ErrorKind::InvalidArgument, "no colors requested");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw Error(ErrorKind::InvalidArgument, "colors must be ascending");

  std::vector<GrowthRecord> out(ns.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ns.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < ns.size(); ++i) out[i] = growth_record(engine, e, ns[i], split_mult);
    return out;
  }

  // Largest colors first so the expensive entries start early.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < ns.size();) {
      const std::size_t i = ns.size() - 1 - k;
      try {
        out[i] = growth_record(engine, e, ns[i], split_mult);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<GrowthRecord> growth_table(const LinkExpr& e, const std::vector<int>& ns, int split_mult,
                                       unsigned threads) {
  JonesEngine engine;
  return growth_table(engine, e, ns, split_mult, threads);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error(ErrorKind::InsufficientData, "need two points to fit a line");
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

ModerationReport moderation_check(const std::vector<GrowthRecord>& records, double slack) {
  if (records.size() < 4)
    throw Error(ErrorKind::InsufficientData, "moderation needs at least 4 records, got " + std::to_string(records.size()));
  for (std::size_t i = 1; i < records.size(); ++i)
    if (records[i].n <= records[i - 1].n) throw Error(ErrorKind::InvalidArgument, "records must have ascending N");

  std::vector<double> ln_n, ln_coeff, ln_span;
  ModerationReport report;
  for (const GrowthRecord& r : records) {
    const double x = std::log(static_cast<double>(r.n));
    ln_n.push_back(x);
    ln_coeff.push_back(log_abs(r.maxabscoeff));
    ln_span.push_back(std::log1p(static_cast<double>(r.maxdeg - r.mindeg)));
    report.log_ratios.push_back(ln_coeff.back() / x);
  }
  report.coefficient_fit = fit_line(ln_n, ln_coeff);
  report.span_fit = fit_line(ln_n, ln_span);

  if (!std::isfinite(report.coefficient_fit.slope) || !std::isfinite(report.span_fit.slope)) {
    report.reason = "non-finite slope";
    return report;
  }
  for (std::size_t i = 1; i < report.log_ratios.size(); ++i) {
    const double prev = report.log_ratios[i - 1], cur = report.log_ratios[i];
    if (cur > prev + slack * std::fabs(prev)) {
      report.reason = "ln(maxabscoeff)/ln N rises from " + std::to_string(prev) + " at N=" +
                      std::to_string(records[i - 1].n) + " to " + std::to_string(cur) + " at N=" +
                      std::to_string(records[i].n);
      return report;
    }
  }
  report.pass = true;
  return report;
}

DecayReport decay_check(const std::vector<GrowthRecord>& records, int from_n, double threshold) {
  DecayReport report;
  std::optional<double> prev;
  int prev_n = 0;
  for (const GrowthRecord& r : records) {
    if (r.n < from_n) continue;
    if (!r.vc_value) {
      report.reason = "normalized value vanishes at N=" + std::to_string(r.n);
      return report;
    }
    if (prev && !(*r.vc_value < *prev)) {
      report.reason = "vc_value does not decrease from N=" + std::to_string(prev_n) + " to N=" + std::to_string(r.n);
      return report;
    }
    prev = r.vc_value;
    prev_n = r.n;
  }
  if (!prev) {
    report.reason = "no records with N >= " + std::to_string(from_n);
    return report;
  }
  if (!(*prev < threshold)) {
    report.reason = "vc_value " + std::to_string(*prev) + " at N=" + std::to_string(prev_n) + " is not below " +
                    std::to_string(threshold);
    return report;
  }
  report.pass = true;
  return report;
}

}  // namespace cjp
