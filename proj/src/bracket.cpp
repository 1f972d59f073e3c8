#include "cjp/bracket.hpp"

#include <cstdlib>
#include <numeric>

#include "cjp/error.hpp"

namespace cjp {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
    sets_ = n;
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& px = parent_[static_cast<std::size_t>(x)];
      px = parent_[static_cast<std::size_t>(px)];
      x = px;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[static_cast<std::size_t>(a)] = b;
      --sets_;
    }
  }
  int sets() const { return sets_; }

 private:
  std::vector<int> parent_;
  int sets_ = 0;
};

void check_bound(std::size_t crossings, std::size_t bound) {
  if (crossings > bound)
    throw Error(ErrorKind::TooManyCrossings,
                std::to_string(crossings) + " crossings exceed the bound " + std::to_string(bound));
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw Error(ErrorKind::InvalidArgument, "negative loop count");
  std::vector<int> seen;
  for (const Crossing& x : crossings_) {
    if (x.sign != 1 && x.sign != -1) throw Error(ErrorKind::InvalidArgument, "crossing sign must be +1 or -1");
    for (int e : x.arms) {
      if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative edge label");
      if (static_cast<std::size_t>(e) >= seen.size()) seen.resize(static_cast<std::size_t>(e) + 1, 0);
      ++seen[static_cast<std::size_t>(e)];
    }
  }
  for (std::size_t e = 0; e < seen.size(); ++e)
    if (seen[e] != 2)
      throw Error(ErrorKind::InvalidArgument, "edge " + std::to_string(e) + " appears " +
                                                  std::to_string(seen[e]) + " times");
  edge_count_ = static_cast<int>(seen.size());
}

PlanarDiagram PlanarDiagram::unknot() { return PlanarDiagram({}, 1); }

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const Crossing& x : crossings_) w += x.sign;
  return w;
}

int PlanarDiagram::component_count() const {
  UnionFind uf(edge_count_);
  for (const Crossing& x : crossings_) {
    uf.unite(x.arms[0], x.arms[2]);
    uf.unite(x.arms[1], x.arms[3]);
  }
  return uf.sets() + free_loops_;
}

PlanarDiagram braid_closure_diagram(int strands, const std::vector<int>& word, std::size_t crossing_bound) {
  if (strands < 1) throw Error(ErrorKind::InvalidArgument, "a braid needs at least one strand");
  for (int letter : word)
    if (letter == 0 || std::abs(letter) >= strands)
      throw Error(ErrorKind::InvalidArgument, "generator " + std::to_string(letter) + " on " +
                                                  std::to_string(strands) + " strands");
  check_bound(word.size(), crossing_bound);

  const auto n = static_cast<std::size_t>(strands);
  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 0);
  int next = strands;
  std::vector<Crossing> crossings;
  for (int letter : word) {
    const auto k = static_cast<std::size_t>(std::abs(letter) - 1);
    const int left_out = next++;   // leaves at position k (NW)
    const int right_out = next++;  // leaves at position k+1 (NE)
    if (letter > 0) {
      // Left strand passes over from SW to NE; under-strand enters at SE.
      crossings.push_back({{current[k + 1], right_out, left_out, current[k]}, 1});
    } else {
      // Right strand passes over from SE to NW; under-strand enters at SW.
      crossings.push_back({{current[k], current[k + 1], right_out, left_out}, -1});
    }
    current[k] = left_out;
    current[k + 1] = right_out;
  }

  // Close the braid: the top edge at position k is the bottom edge k. A
  // strand no generator touches is a free loop.
  int free_loops = 0;
  std::vector<int> relabel(static_cast<std::size_t>(next), -1);
  for (std::size_t k = 0; k < n; ++k) {
    if (current[k] == static_cast<int>(k)) ++free_loops;
    else relabel[static_cast<std::size_t>(current[k])] = static_cast<int>(k);
  }
  std::vector<int> dense(static_cast<std::size_t>(next), -1);
  int fresh = 0;
  for (Crossing& x : crossings)
    for (int& e : x.arms) {
      const int target = relabel[static_cast<std::size_t>(e)] < 0 ? e : relabel[static_cast<std::size_t>(e)];
      int& label = dense[static_cast<std::size_t>(target)];
      if (label < 0) label = fresh++;
      e = label;
    }
  return PlanarDiagram(std::move(crossings), free_loops);
}

PlanarDiagram torus_closure_diagram(std::int64_t r, std::int64_t s, std::size_t crossing_bound) {
  if (r == 0 || s < 2) throw Error(ErrorKind::InvalidArgument, "torus closure needs r != 0 and s >= 2");
  const std::int64_t reps = r < 0 ? -r : r;
  check_bound(static_cast<std::size_t>(reps * (s - 1)), crossing_bound);
  std::vector<int> word;
  for (std::int64_t rep = 0; rep < reps; ++rep)
    for (std::int64_t k = 1; k < s; ++k) word.push_back(static_cast<int>(r > 0 ? k : -k));
  return braid_closure_diagram(static_cast<int>(s), word, crossing_bound);
}

PlanarDiagram with_curl(const PlanarDiagram& d, int edge, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "curl sign must be +1 or -1");
  std::vector<Crossing> crossings = d.crossings();
  int free_loops = d.free_loops();
  const int loop = d.edge_count();
  int tail = edge;
  int head = edge;
  if (crossings.empty()) {
    if (free_loops == 0) throw Error(ErrorKind::InvalidArgument, "empty diagram");
    --free_loops;
    tail = head = loop + 1;
  } else {
    if (edge < 0 || edge >= d.edge_count()) throw Error(ErrorKind::InvalidArgument, "no such edge");
    // The occurrence where the edge enters a crossing now belongs to the head part.
    head = loop + 1;
    bool moved = false;
    for (Crossing& x : crossings) {
      if (moved) break;
      if (x.arms[0] == edge) {
        x.arms[0] = head;
        moved = true;
      } else if (x.over_in() == edge) {
        (x.sign > 0 ? x.arms[3] : x.arms[1]) = head;
        moved = true;
      }
    }
  }
  // The strand enters under along `tail`, runs around `loop` and leaves over along `head`.
  if (sign > 0) crossings.push_back({{tail, head, loop, loop}, 1});
  else crossings.push_back({{tail, loop, loop, head}, -1});

  if (d.crossings().empty()) {
    // Labels must be 0..E-1.
    for (Crossing& x : crossings)
      for (int& e : x.arms) e -= loop;
  }
  return PlanarDiagram(std::move(crossings), free_loops);
}

LaurentPoly kauffman_bracket(const PlanarDiagram& d, std::size_t crossing_bound) {
  const auto& xs = d.crossings();
  check_bound(xs.size(), crossing_bound);
  const std::size_t n = xs.size();
  const int max_loops = d.edge_count() + d.free_loops() + 1;

  // counts[a][loops]: states with `a` A-smoothings and `loops` circles.
  std::vector<std::vector<std::int64_t>> counts(n + 1, std::vector<std::int64_t>(static_cast<std::size_t>(max_loops) + 1, 0));
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    UnionFind uf(d.edge_count());
    std::size_t a_count = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& arm = xs[k].arms;
      if ((state >> k) & 1U) {
        uf.unite(arm[0], arm[3]);
        uf.unite(arm[1], arm[2]);
      } else {
        ++a_count;
        uf.unite(arm[0], arm[1]);
        uf.unite(arm[2], arm[3]);
      }
    }
    const int loops = uf.sets() + d.free_loops();
    ++counts[a_count][static_cast<std::size_t>(loops)];
  }

  const LaurentPoly delta = LaurentPoly::from_dense(-2, std::vector<std::int64_t>{-1, 0, 0, 0, -1});
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1L)};
  for (int k = 1; k <= max_loops; ++k) delta_pow.push_back(multiply(delta_pow.back(), delta));

  PolyAccumulator acc;
  for (std::size_t a = 0; a <= n; ++a) {
    const std::int64_t a_exp = static_cast<std::int64_t>(a) - static_cast<std::int64_t>(n - a);
    for (std::size_t loops = 1; loops < counts[a].size(); ++loops)
      if (counts[a][loops] != 0) acc.add(delta_pow[loops - 1], counts[a][loops], a_exp);
  }
  return acc.take();
}

LaurentPoly jones_from_bracket(const PlanarDiagram& d, std::size_t crossing_bound) {
  const LaurentPoly bracket = kauffman_bracket(d, crossing_bound);
  const int w = d.writhe();
  // (-A^3)^{-w} = (-1)^w A^{-3w}
  const LaurentPoly corrected = bracket.shifted(-3 * static_cast<std::int64_t>(w));
  return (w % 2 == 0) ? corrected : -corrected;
}

std::optional<MonomialMatch> equal_up_to_monomial(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::InvalidArgument, "monomial alignment of zero");
  for (bool mirrored : {false, true}) {
    const LaurentPoly base = mirrored ? mirror(q) : q;
    const Integer lp = p.leading_coefficient();
    const Integer lq = base.leading_coefficient();
    if (abs(lp) != abs(lq)) continue;
    const int sign = (sgn(lp) == sgn(lq)) ? 1 : -1;
    const std::int64_t shift = p.max_degree() - base.max_degree();
    LaurentPoly aligned = base.shifted(shift);
    if (sign < 0) aligned = -aligned;
    if (aligned == p) return MonomialMatch{sign, shift, mirrored};
  }
  return std::nullopt;
}

}  // namespace cjp
