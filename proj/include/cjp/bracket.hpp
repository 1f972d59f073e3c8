#pragma once

// Kauffman bracket state sums on small planar diagrams. Independent of the
// cabling engine; used to cross-check it at color 2.
//
// Crossings use PD-style labels X[a, b, c, d]: a is the incoming
// under-strand edge and the rest follow counterclockwise. The A-smoothing
// joins (a,b),(c,d); the B-smoothing joins (a,d),(b,c). Then
//   <positive curl> = -A^3,  <unknot> = 1,  delta = -A^2 - A^-2,
// and (-A^3)^{-writhe} <D> is the Jones polynomial V(t) at t = A^-4.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cjp/laurent.hpp"

namespace cjp {

struct Crossing {
  std::array<int, 4> arms{};
  int sign = 1;  // +1 positive, -1 negative

  // Incoming arm of the over-strand.
  int over_in() const { return sign > 0 ? arms[3] : arms[1]; }
  int over_out() const { return sign > 0 ? arms[1] : arms[3]; }
};

class PlanarDiagram {
 public:
  static constexpr std::size_t kDefaultCrossingBound = 16;

  PlanarDiagram() = default;
  // Throws InvalidArgument unless every edge label 0..E-1 appears exactly twice.
  PlanarDiagram(std::vector<Crossing> crossings, int free_loops);

  static PlanarDiagram unknot();

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  int edge_count() const { return edge_count_; }
  int writhe() const;
  int component_count() const;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  int edge_count_ = 0;
};

// Closure of a braid on `strands` strands, all oriented upward. Each letter
// is +k or -k for sigma_k^{+1} or sigma_k^{-1}, 1 <= k < strands.
PlanarDiagram braid_closure_diagram(int strands, const std::vector<int>& word,
                                    std::size_t crossing_bound = PlanarDiagram::kDefaultCrossingBound);

// Closure of (sigma_1 ... sigma_{s-1})^r, strands oriented alike.
PlanarDiagram torus_closure_diagram(std::int64_t r, std::int64_t s,
                                    std::size_t crossing_bound = PlanarDiagram::kDefaultCrossingBound);

// Inserts a Reidemeister-I curl of the given sign on `edge` (or on a free
// loop when the diagram has no crossings).
PlanarDiagram with_curl(const PlanarDiagram& d, int edge, int sign);

LaurentPoly kauffman_bracket(const PlanarDiagram& d,
                             std::size_t crossing_bound = PlanarDiagram::kDefaultCrossingBound);
LaurentPoly jones_from_bracket(const PlanarDiagram& d,
                               std::size_t crossing_bound = PlanarDiagram::kDefaultCrossingBound);

struct MonomialMatch {
  int sign = 1;
  std::int64_t shift = 0;
  bool mirrored = false;
  friend bool operator==(const MonomialMatch&, const MonomialMatch&) = default;
};

// (sign, shift, mirrored) with P = sign * A^shift * Q, or with Q replaced
// by its mirror. The unmirrored alignment is tried first.
std::optional<MonomialMatch> equal_up_to_monomial(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace cjp
