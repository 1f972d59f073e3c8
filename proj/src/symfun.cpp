#include "cjp/symfun.hpp"

#include <sstream>

#include "cjp/error.hpp"

namespace cjp {

TwoRowPartition TwoRowPartition::make(std::int64_t mu1, std::int64_t mu2) {
  if (mu2 < 0 || mu1 < mu2)
    throw Error(ErrorKind::InvalidArgument,
                "(" + std::to_string(mu1) + "," + std::to_string(mu2) + ") is not a partition");
  return {mu1, mu2};
}

LaurentPoly character_polynomial(std::int64_t j) {
  if (j < 1) throw Error(ErrorKind::InvalidArgument, "character index must be >= 1");
  std::vector<std::int64_t> dense(static_cast<std::size_t>(2 * (j - 1) + 1), 0);
  for (std::size_t i = 0; i < dense.size(); i += 2) dense[i] = 1;
  return LaurentPoly::from_dense(-(j - 1), std::move(dense));
}

LaurentPoly h_product(const ColorVector& colors, std::int64_t p) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be >= 1");
  LaurentPoly product(1L);
  for (int n : colors) {
    const std::int64_t top = p * (n - 1);
    std::vector<std::int64_t> dense(static_cast<std::size_t>(2 * top + 1), 0);
    for (std::size_t i = 0; i < dense.size(); i += static_cast<std::size_t>(2 * p)) dense[i] = 1;
    product = multiply(product, LaurentPoly::from_dense(-top, std::move(dense)));
  }
  return product;
}

CharacterExpansion h_product_character_expansion(const ColorVector& colors, std::int64_t p) {
  LaurentPoly rest = h_product(colors, p);
  CharacterExpansion out;
  while (!rest.is_zero()) {
    const std::int64_t top = rest.max_degree();
    if (top < 0) throw Error(ErrorKind::InvalidArgument, "expansion input is not symmetric");
    const Integer c = rest.leading_coefficient();
    out[top + 1] = c;
    rest -= character_polynomial(top + 1).scaled(c);
  }
  return out;
}

int skew_schur_at_roots(const TwoRowPartition& outer, const TwoRowPartition& inner, std::int64_t p) {
  if (!outer.contains(inner))
    throw Error(ErrorKind::NotContained, "inner partition is not contained in the outer one");
  // h_m(1, w, ..., w^{p-1}) = 1 if m >= 0 and p | m, else 0.
  auto h = [p](std::int64_t m) { return (m >= 0 && m % p == 0) ? 1 : 0; };
  return h(outer.mu1 - inner.mu1) * h(outer.mu2 - inner.mu2) -
         h(outer.mu1 - inner.mu2 + 1) * h(outer.mu2 - inner.mu1 - 1);
}

Integer chain_trace(const ColorVector& colors, std::int64_t p, const TwoRowPartition& mu) {
  const std::int64_t expected_size = p * (colors.total() - static_cast<std::int64_t>(colors.size()));
  if (mu.size() != expected_size) return 0;
  Integer total = 0;
  for_each_chain(colors, p, mu, [&](int contribution) { total += contribution; });
  return total;
}

Integer cabling_coefficient(const CoeffTable& table, std::int64_t p, std::int64_t j) {
  Integer total = 0;
  if ((j - 1) % p == 0) total += table.at((j - 1) / p);
  if ((j + 1) % p == 0) total -= table.at(-(j + 1) / p);
  return total;
}

VerifyReport verify_coefficients(const ColorVector& colors, std::int64_t p) {
  VerifyReport report;
  const CoeffTable table(colors);
  const std::int64_t size = p * table.max_index();

  auto fail = [&](const std::string& what) {
    if (report.pass) {
      report.pass = false;
      report.counterexample = what;
    }
  };
  auto describe = [&]() {
    std::ostringstream os;
    os << "colors (";
    for (std::size_t k = 0; k < colors.size(); ++k) os << (k ? "," : "") << colors[k];
    os << ") p=" << p;
    return os.str();
  };

  for (std::int64_t mu2 = 0; 2 * mu2 <= size; ++mu2) {
    const TwoRowPartition mu{size - mu2, mu2};
    const Integer k_mu = chain_trace(colors, p, mu);
    const Integer expected = cabling_coefficient(table, p, mu.dimension());
    ++report.checks;
    if (k_mu != expected)
      fail(describe() + ": K_(" + std::to_string(mu.mu1) + "," + std::to_string(mu.mu2) + ") = " +
           k_mu.get_str() + ", trinomial route gives " + expected.get_str());
  }

  const CharacterExpansion expansion = h_product_character_expansion(colors, p);
  for (std::int64_t j = 1; j <= size + 1; ++j) {
    const auto it = expansion.find(j);
    const Integer got = it == expansion.end() ? Integer(0) : it->second;
    const Integer expected = cabling_coefficient(table, p, j);
    ++report.checks;
    if (got != expected)
      fail(describe() + ": character coefficient of chi_" + std::to_string(j) + " = " + got.get_str() +
           ", trinomial route gives " + expected.get_str());
  }
  for (const auto& [j, c] : expansion) {
    if (j > size + 1) fail(describe() + ": unexpected character chi_" + std::to_string(j));
  }
  return report;
}

}  // namespace cjp
