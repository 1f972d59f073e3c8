#pragma once

// Expression trees for zero-volume banded links: the unknot, cablings,
// framing twists and connected sums.
//
// Grammar (1-based component indices, whitespace ignored):
//   expr := "unknot"
//         | "cable" "(" int "," posint ";" posint ";" expr ")"      r , s ; i ; child
//         | "twist" "(" int ";" posint ";" expr ")"                  f ; i ; child
//         | "connsum" "(" expr "," posint ";" expr "," posint ")"    left , i ; right , j
//
// Component order. Cable on component i of a c-component child gives c+g-1
// components, g = gcd(|r|, s): the child's 1..i-1, then the g new components
// by strand residue class 0..g-1, then the child's i+1..c. ConnSum keeps the
// left components in order (the joined one at position i) followed by the
// right components other than j.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cjp {

struct LinkNode;

class LinkExpr {
 public:
  enum class Kind { Unknot, Cable, Twist, ConnSum };

  static LinkExpr unknot();
  // Throw BadComponentIndex / BadCableParams on invalid arguments.
  static LinkExpr cable(LinkExpr child, int component, std::int64_t r, std::int64_t s);
  static LinkExpr twist(LinkExpr child, int component, std::int64_t f);
  static LinkExpr connsum(LinkExpr left, int i, LinkExpr right, int j);

  Kind kind() const;
  int component_count() const;

  // Cable / Twist
  const LinkExpr& child() const;
  int component() const;
  std::int64_t r() const;
  std::int64_t s() const;
  std::int64_t f() const;
  // gcd(|r|, s) and s / gcd for a Cable node.
  std::int64_t cable_gcd() const;
  std::int64_t strands_per_component() const;

  // ConnSum
  const LinkExpr& left() const;
  const LinkExpr& right() const;
  int left_component() const;
  int right_component() const;

  // Node identity, used as a memoization key.
  const std::shared_ptr<const LinkNode>& node() const { return node_; }

  friend bool operator==(const LinkExpr& a, const LinkExpr& b);

 private:
  explicit LinkExpr(std::shared_ptr<const LinkNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const LinkNode> node_;
};

struct LinkNode {
  LinkExpr::Kind kind = LinkExpr::Kind::Unknot;
  int components = 1;
  std::vector<LinkExpr> children;
  int i = 0;
  int j = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::int64_t f = 0;
};

LinkExpr parse(std::string_view text);
// Canonical text; parse(print(e)) == e.
std::string print(const LinkExpr& e);
int component_count(const LinkExpr& e);
LinkExpr mirror_expr(const LinkExpr& e);
// ColorArityMismatch when the length differs from the component count,
// NonPositiveColor on an entry < 1.
void validate_colors(const LinkExpr& e, const std::vector<int>& colors);

}  // namespace cjp
