#pragma once

// Two symmetric-function routes to the q-independent cabling coefficients,
// used to certify the trinomial tables:
//
//  * character expansion: expand prod_k h_{N_k-1}(t^p, t^-p) in the basis
//    chi_j(t) = (t^j - t^-j) / (t - t^-1) = s_mu(t, t^-1), j = mu1 - mu2 + 1;
//  * chain enumeration: K_mu = sum over chains 0 = nu0 < nu1 < ... < nu_g = mu
//    with |nu_k / nu_{k-1}| = p (N_{k-1} - 1) of prod_k s_{nu_k/nu_{k-1}}(1, w, ..., w^{p-1}),
//    w = exp(2 pi i / p), each factor a 2x2 Jacobi-Trudi determinant.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cjp/laurent.hpp"
#include "cjp/trinomial.hpp"

namespace cjp {

struct TwoRowPartition {
  std::int64_t mu1 = 0;
  std::int64_t mu2 = 0;

  // Throws InvalidArgument unless mu1 >= mu2 >= 0.
  static TwoRowPartition make(std::int64_t mu1, std::int64_t mu2);
  std::int64_t size() const { return mu1 + mu2; }
  // j = mu1 - mu2 + 1, the dimension of the matching sl2 irreducible.
  std::int64_t dimension() const { return mu1 - mu2 + 1; }
  bool contains(const TwoRowPartition& inner) const { return inner.mu1 <= mu1 && inner.mu2 <= mu2; }

  friend auto operator<=>(const TwoRowPartition&, const TwoRowPartition&) = default;
};

// j -> c_j, only nonzero entries.
using CharacterExpansion = std::map<std::int64_t, Integer>;

// chi_j(t) as a Laurent polynomial in t.
LaurentPoly character_polynomial(std::int64_t j);

// prod_k h_{N_k - 1}(t^p, t^-p) as a Laurent polynomial in t.
LaurentPoly h_product(const ColorVector& colors, std::int64_t p);

CharacterExpansion h_product_character_expansion(const ColorVector& colors, std::int64_t p);

// s_{outer/inner}(1, w, ..., w^{p-1}); always in {-1, 0, 1}. NotContained
// when inner is not inside outer.
int skew_schur_at_roots(const TwoRowPartition& outer, const TwoRowPartition& inner, std::int64_t p);

// K_mu by exhaustive chain enumeration; 0 unless |mu| = p (|N| - g).
Integer chain_trace(const ColorVector& colors, std::int64_t p, const TwoRowPartition& mu);

// Calls visit(chain_contribution) for every chain with a nonzero product.
template <class Visit>
void for_each_chain(const ColorVector& colors, std::int64_t p, const TwoRowPartition& mu, Visit&& visit);

// Signed cabling coefficient attached to dimension j:
//   sum over m in the trinomial support with |m p + 1| = j of sgn(m p + 1) C[m].
Integer cabling_coefficient(const CoeffTable& table, std::int64_t p, std::int64_t j);

struct VerifyReport {
  bool pass = true;
  std::size_t checks = 0;
  std::optional<std::string> counterexample;
};

VerifyReport verify_coefficients(const ColorVector& colors, std::int64_t p);

// ---------------------------------------------------------------------------

namespace detail {
template <class Visit>
void chains_from(const ColorVector& colors, std::int64_t p, const TwoRowPartition& mu, std::size_t step,
                 const TwoRowPartition& current, int product, Visit& visit) {
  if (step == colors.size()) {
    if (current == mu) visit(product);
    return;
  }
  const std::int64_t target = current.size() + p * (colors[step] - 1);
  for (std::int64_t a = current.mu1; a <= mu.mu1 && a <= target; ++a) {
    const std::int64_t b = target - a;
    if (b < current.mu2 || b > mu.mu2 || b > a) continue;
    const TwoRowPartition next{a, b};
    const int factor = skew_schur_at_roots(next, current, p);
    if (factor == 0) continue;
    chains_from(colors, p, mu, step + 1, next, product * factor, visit);
  }
}
}  // namespace detail

template <class Visit>
void for_each_chain(const ColorVector& colors, std::int64_t p, const TwoRowPartition& mu, Visit&& visit) {
  detail::chains_from(colors, p, mu, 0, TwoRowPartition{0, 0}, 1, visit);
}

}  // namespace cjp
