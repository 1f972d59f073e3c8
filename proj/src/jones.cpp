#include "cjp/jones.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cjp/error.hpp"
#include "cjp/trinomial.hpp"

namespace cjp {

std::int64_t cable_term_exponent(std::int64_t r, std::int64_t s, std::int64_t m) {
  const std::int64_t g = std::gcd(r < 0 ? -r : r, s);
  const std::int64_t p = s / g;
  return (r / g) * m * (m * p + 2);
}

LaurentPoly connected_sum(const LaurentPoly& left, int left_color, const LaurentPoly& right,
                          int right_color) {
  if (left_color != right_color)
    throw Error(ErrorKind::ColorMismatchAtConnSum,
                "joined components colored " + std::to_string(left_color) + " and " +
                    std::to_string(right_color));
  return divide_by_quantum_integer(multiply(left, right), left_color);
}

std::size_t JonesEngine::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<const void*>{}(k.node.get());
  for (int c : k.colors) h = h * 1000003u ^ std::hash<int>{}(c);
  return h;
}

JonesEngine::JonesEngine(EngineOptions options) : options_(options) {}

std::size_t JonesEngine::cache_entries() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::size_t JonesEngine::cached_slots() const {
  std::lock_guard lock(mutex_);
  return cached_slots_;
}

void JonesEngine::clear_cache() {
  std::lock_guard lock(mutex_);
  cache_.clear();
  cached_slots_ = 0;
}

LaurentPoly JonesEngine::colored_jones(const LinkExpr& e, const std::vector<int>& colors) {
  validate_colors(e, colors);
  return evaluate(e, colors);
}

LaurentPoly JonesEngine::signed_color_fetch(const LinkExpr& e, const std::vector<int>& colors,
                                            int component, std::int64_t j) {
  if (component < 1 || component > e.component_count())
    throw Error(ErrorKind::BadComponentIndex, "component " + std::to_string(component));
  if (j == 0) return {};
  std::vector<int> recolored = colors;
  recolored.at(static_cast<std::size_t>(component - 1)) = static_cast<int>(j < 0 ? -j : j);
  validate_colors(e, recolored);
  LaurentPoly v = evaluate(e, recolored);
  return j < 0 ? -v : v;
}

NormalizedValue JonesEngine::normalized_jones(const LinkExpr& e, const std::vector<int>& colors,
                                              int split_mult) {
  if (split_mult < 1) throw Error(ErrorKind::InvalidArgument, "split multiplicity must be >= 1");
  validate_colors(e, colors);
  if (!std::all_of(colors.begin(), colors.end(), [&](int c) { return c == colors.front(); }))
    throw Error(ErrorKind::InvalidArgument, "normalization needs all components colored alike");
  const int n = colors.front();
  LaurentPoly value = evaluate(e, colors);
  for (int k = 0; k < split_mult; ++k) {
    try {
      value = divide_by_quantum_integer(value, n);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotDivisible) throw;
      return DeferredRatio{std::move(value), n, split_mult - k};
    }
  }
  return value;
}

LaurentPoly JonesEngine::evaluate(const LinkExpr& e, const std::vector<int>& colors) {
  Key key{e.node(), colors};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  LaurentPoly value = compute(e, colors);
  {
    std::lock_guard lock(mutex_);
    if (cached_slots_ + value.span() <= options_.cache_slot_budget) {
      // Concurrent writers computed identical values; keep the first.
      if (cache_.emplace(std::move(key), value).second) cached_slots_ += value.span();
    }
  }
  return value;
}

LaurentPoly JonesEngine::compute(const LinkExpr& e, const std::vector<int>& colors) {
  switch (e.kind()) {
    case LinkExpr::Kind::Unknot:
      return quantum_integer(colors.at(0));
    case LinkExpr::Kind::Twist: {
      const std::int64_t n = colors.at(static_cast<std::size_t>(e.component() - 1));
      return evaluate(e.child(), colors).shifted(e.f() * (n * n - 1));
    }
    case LinkExpr::Kind::Cable:
      return compute_cable(e, colors);
    case LinkExpr::Kind::ConnSum:
      return compute_connsum(e, colors);
  }
  return {};
}

LaurentPoly JonesEngine::compute_cable(const LinkExpr& e, const std::vector<int>& colors) {
  const auto g = static_cast<std::size_t>(e.cable_gcd());
  const std::int64_t p = e.strands_per_component();
  const auto first = static_cast<std::size_t>(e.component() - 1);

  const ColorVector cable_colors(
      std::vector<int>(colors.begin() + static_cast<std::ptrdiff_t>(first),
                       colors.begin() + static_cast<std::ptrdiff_t>(first + g)));
  std::vector<int> child_colors(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(first));
  child_colors.push_back(0);
  child_colors.insert(child_colors.end(), colors.begin() + static_cast<std::ptrdiff_t>(first + g),
                      colors.end());

  const CoeffTable table(cable_colors);
  PolyAccumulator acc;
  for (std::int64_t m : table.support()) {
    const std::int64_t j = m * p + 1;
    if (j == 0) continue;
    child_colors[first] = static_cast<int>(j < 0 ? -j : j);
    const LaurentPoly term = evaluate(e.child(), child_colors);
    const Integer c = j < 0 ? Integer(-table.at(m)) : table.at(m);
    acc.add(term, c, cable_term_exponent(e.r(), e.s(), m));
  }
  return acc.take();
}

LaurentPoly JonesEngine::compute_connsum(const LinkExpr& e, const std::vector<int>& colors) {
  const LinkExpr& left = e.left();
  const LinkExpr& right = e.right();
  const auto cl = static_cast<std::size_t>(left.component_count());
  const int joined = colors.at(static_cast<std::size_t>(e.left_component() - 1));

  const std::vector<int> left_colors(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(cl));
  std::vector<int> right_colors(colors.begin() + static_cast<std::ptrdiff_t>(cl), colors.end());
  right_colors.insert(right_colors.begin() + (e.right_component() - 1), joined);

  const LaurentPoly jl = evaluate(left, left_colors);
  const LaurentPoly jr = evaluate(right, right_colors);
  return connected_sum(jl, joined, jr, right_colors[static_cast<std::size_t>(e.right_component() - 1)]);
}

LaurentPoly colored_jones(const LinkExpr& e, const std::vector<int>& colors) {
  JonesEngine engine;
  return engine.colored_jones(e, colors);
}

LaurentPoly signed_color_fetch(const LinkExpr& e, const std::vector<int>& colors, int component,
                               std::int64_t j) {
  JonesEngine engine;
  return engine.signed_color_fetch(e, colors, component, j);
}

NormalizedValue normalized_jones(const LinkExpr& e, const std::vector<int>& colors, int split_mult) {
  JonesEngine engine;
  return engine.normalized_jones(e, colors, split_mult);
}

}  // namespace cjp
