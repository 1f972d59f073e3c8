#include "doctest.h"

#include "cjp/error.hpp"
#include "cjp/symfun.hpp"

using namespace cjp;

namespace {

CharacterExpansion expansion(std::initializer_list<std::pair<const std::int64_t, Integer>> items) { return items; }

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

TEST_CASE("character expansions") {
  CHECK(h_product_character_expansion({2, 2}, 1) == expansion({{3, 1}, {1, 1}}));
  CHECK(h_product_character_expansion({2}, 2) == expansion({{3, 1}, {1, -1}}));
  for (int n = 1; n <= 8; ++n) CHECK(h_product_character_expansion({n}, 1) == expansion({{n, 1}}));
  CHECK(character_polynomial(3) == LaurentPoly::from_dense(-2, std::vector<std::int64_t>{1, 0, 1, 0, 1}));
}

TEST_CASE("skew Schur functions at roots of unity") {
  const TwoRowPartition empty{0, 0};
  CHECK(skew_schur_at_roots({4, 0}, empty, 4) == 1);
  CHECK(skew_schur_at_roots({3, 1}, empty, 4) == -1);
  CHECK(skew_schur_at_roots({2, 2}, empty, 4) == 0);
  CHECK(skew_schur_at_roots({5, 2}, {5, 2}, 3) == 1);
  try {
    skew_schur_at_roots({2, 0}, {1, 1}, 2);
    FAIL("expected NotContained");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotContained);
  }
  CHECK_THROWS_AS(TwoRowPartition::make(1, 2), Error);
}

TEST_CASE("chain traces") {
  CHECK(chain_trace({2, 2}, 4, {4, 4}) == 2);
  CHECK(chain_trace({2, 2}, 4, {7, 1}) == -1);
  CHECK(chain_trace({2}, 3, {3, 0}) == 1);
  CHECK(chain_trace({2}, 3, {2, 0}) == 0);
}

TEST_CASE("coefficient verification examples") {
  CHECK(verify_coefficients({2, 2}, 4).pass);
  CHECK(verify_coefficients({3}, 2).pass);
  CHECK(verify_coefficients({2, 3}, 1).pass);
}

TEST_CASE("sweep over small color vectors") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c) {
        if (b == 0 && c > 0) continue;
        std::vector<int> colors{a};
        if (b) colors.push_back(b);
        if (c) colors.push_back(c);
        for (int p = 1; p <= 3; ++p) {
          const VerifyReport report = verify_coefficients(ColorVector(colors), p);
          CHECK_MESSAGE(report.pass, report.counterexample.value_or(""));
        }
      }
}

TEST_CASE("sign coherence of chain contributions") {
  for (const ColorVector& colors : {ColorVector{2, 2}, ColorVector{3, 2}, ColorVector{2, 3, 4}, ColorVector{4, 4, 2}})
    for (int p = 1; p <= 4; ++p) {
      const std::int64_t size = p * (colors.total() - static_cast<std::int64_t>(colors.size()));
      for (std::int64_t mu2 = 0; 2 * mu2 <= size; ++mu2) {
        const TwoRowPartition mu{size - mu2, mu2};
        const int expected = (mu2 % p) % 2 == 0 ? 1 : -1;
        for_each_chain(colors, p, mu, [&](int contribution) { CHECK(contribution == expected); });
      }
    }
}

TEST_CASE("Pascal rows for all-two colors") {
  for (int g = 1; g <= 6; ++g)
    for (int p = 2; p <= 4; ++p) {
      const ColorVector colors(std::vector<int>(static_cast<std::size_t>(g), 2));
      const std::int64_t size = p * g;
      for (std::int64_t mu2 = 0; 2 * mu2 <= size; ++mu2) {
        const TwoRowPartition mu{size - mu2, mu2};
        const std::int64_t j = mu.dimension();
        // mu1 - mu2 + 1 = sgn(w)(2wp + 1) with m = 2w.
        std::int64_t m = 0;
        bool found = false;
        for (std::int64_t cand = -g; cand <= g; ++cand) {
          const std::int64_t v = cand * p + 1;
          if ((cand - g) % 2 == 0 && (v == j || v == -j)) {
            m = cand;
            found = true;
          }
        }
        const Integer k = chain_trace(colors, p, mu);
        if (!found) {
          CHECK(k == 0);
          continue;
        }
        CHECK(abs(k) == binomial(g, static_cast<int>((g + m) / 2)));
      }
    }
}
