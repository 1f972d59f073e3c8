#pragma once

// Evaluation of normalized invariants at A0 = exp(i pi / 2N), with a
// l'Hospital ladder when the normalization is not an exact division, and
// the growth statistics behind the zero-volume decay checks.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cjp/jones.hpp"
#include "cjp/laurent.hpp"
#include "cjp/linkexpr.hpp"

namespace cjp {

struct LimitOptions {
  // A value counts as vanishing when |value| <= tolerance * scale, where
  // scale is the folded coefficient magnitude from eval_at_root_scaled.
  double tolerance = 1e-8;
  int depth_cap = 8;
};

bool vanishes_at(const LaurentPoly& p, const RootOfUnityPoint& pt, double tolerance = 1e-8);

// Number of A-derivatives needed before p stops vanishing at pt.
// InvalidArgument for the zero polynomial; DepthExceeded past the cap.
int vanishing_order(const LaurentPoly& p, const RootOfUnityPoint& pt, const LimitOptions& options = {});

std::complex<double> lhospital_limit(const LaurentPoly& numerator, const LaurentPoly& denominator,
                                     const RootOfUnityPoint& pt, const LimitOptions& options = {});

std::complex<double> eval_normalized_at_root(JonesEngine& engine, const LinkExpr& e, int n,
                                             int split_mult = 1);
std::complex<double> eval_normalized_at_root(const LinkExpr& e, int n, int split_mult = 1);

// Always goes through lhospital_limit(J, [N]^split_mult), skipping exact division.
std::complex<double> eval_normalized_by_limit(JonesEngine& engine, const LinkExpr& e, int n,
                                              int split_mult = 1);

struct GrowthRecord {
  int n = 0;
  // Degrees and coefficient size refer to the unnormalized J.
  std::int64_t maxdeg = 0;
  std::int64_t mindeg = 0;
  Integer maxabscoeff;
  double abs_eval = 0.0;
  // (2 pi / N) ln abs_eval; empty when abs_eval is zero.
  std::optional<double> vc_value;
};

GrowthRecord growth_record(JonesEngine& engine, const LinkExpr& e, int n, int split_mult = 1);

// Records in the order of ns; with threads > 1 entries are computed
// concurrently through the shared engine.
std::vector<GrowthRecord> growth_table(JonesEngine& engine, const LinkExpr& e, const std::vector<int>& ns,
                                       int split_mult = 1, unsigned threads = 1);
std::vector<GrowthRecord> growth_table(const LinkExpr& e, const std::vector<int>& ns, int split_mult = 1,
                                       unsigned threads = 1);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root mean square
};

// Least squares y = slope * x + intercept.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct ModerationReport {
  bool pass = false;
  LineFit coefficient_fit;  // ln(maxabscoeff) against ln N
  LineFit span_fit;         // ln(1 + maxdeg - mindeg) against ln N
  std::vector<double> log_ratios;  // ln(maxabscoeff) / ln N per record
  std::string reason;
};

// Needs at least four records with ascending N (InsufficientData otherwise).
ModerationReport moderation_check(const std::vector<GrowthRecord>& records, double slack = 0.10);

struct DecayReport {
  bool pass = false;
  std::string reason;
};

// vc_value strictly decreasing over records with N >= from_n, and the last
// one below threshold.
DecayReport decay_check(const std::vector<GrowthRecord>& records, int from_n = 32, double threshold = 0.3);

}  // namespace cjp
