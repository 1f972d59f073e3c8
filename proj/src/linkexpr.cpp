#include "cjp/linkexpr.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "cjp/error.hpp"

namespace cjp {
namespace {

std::int64_t gcd_for_cable(std::int64_t r, std::int64_t s) {
  return std::gcd(r < 0 ? -r : r, s);
}

void check_component(int index, int count, const char* where) {
  if (index < 1 || index > count)
    throw Error(ErrorKind::BadComponentIndex,
                std::string(where) + " component " + std::to_string(index) + " not in 1.." +
                    std::to_string(count));
}

}  // namespace

LinkExpr LinkExpr::unknot() {
  static const auto node = std::make_shared<const LinkNode>();
  return LinkExpr(node);
}

LinkExpr LinkExpr::cable(LinkExpr child, int component, std::int64_t r, std::int64_t s) {
  if (s < 1) throw Error(ErrorKind::BadCableParams, "cable strand count s must be >= 1");
  check_component(component, child.component_count(), "cable");
  auto n = std::make_shared<LinkNode>();
  n->kind = Kind::Cable;
  n->components = child.component_count() + static_cast<int>(gcd_for_cable(r, s)) - 1;
  n->children = {std::move(child)};
  n->i = component;
  n->r = r;
  n->s = s;
  return LinkExpr(std::move(n));
}

LinkExpr LinkExpr::twist(LinkExpr child, int component, std::int64_t f) {
  check_component(component, child.component_count(), "twist");
  auto n = std::make_shared<LinkNode>();
  n->kind = Kind::Twist;
  n->components = child.component_count();
  n->children = {std::move(child)};
  n->i = component;
  n->f = f;
  return LinkExpr(std::move(n));
}

LinkExpr LinkExpr::connsum(LinkExpr left, int i, LinkExpr right, int j) {
  check_component(i, left.component_count(), "connsum left");
  check_component(j, right.component_count(), "connsum right");
  auto n = std::make_shared<LinkNode>();
  n->kind = Kind::ConnSum;
  n->components = left.component_count() + right.component_count() - 1;
  n->children = {std::move(left), std::move(right)};
  n->i = i;
  n->j = j;
  return LinkExpr(std::move(n));
}

LinkExpr::Kind LinkExpr::kind() const { return node_->kind; }
int LinkExpr::component_count() const { return node_->components; }
const LinkExpr& LinkExpr::child() const { return node_->children.at(0); }
int LinkExpr::component() const { return node_->i; }
std::int64_t LinkExpr::r() const { return node_->r; }
std::int64_t LinkExpr::s() const { return node_->s; }
std::int64_t LinkExpr::f() const { return node_->f; }
std::int64_t LinkExpr::cable_gcd() const { return gcd_for_cable(node_->r, node_->s); }
std::int64_t LinkExpr::strands_per_component() const { return node_->s / cable_gcd(); }
const LinkExpr& LinkExpr::left() const { return node_->children.at(0); }
const LinkExpr& LinkExpr::right() const { return node_->children.at(1); }
int LinkExpr::left_component() const { return node_->i; }
int LinkExpr::right_component() const { return node_->j; }

bool operator==(const LinkExpr& a, const LinkExpr& b) {
  if (a.node_ == b.node_) return true;
  const LinkNode& x = *a.node_;
  const LinkNode& y = *b.node_;
  return x.kind == y.kind && x.i == y.i && x.j == y.j && x.r == y.r && x.s == y.s &&
         x.f == y.f && x.children == y.children;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LinkExpr parse_all() {
    LinkExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (pos_ == digits || ec != std::errc{}) {
      const bool missing = pos_ == digits;
      pos_ = start;
      fail(missing ? "expected integer" : "integer out of range");
    }
    return negative ? -value : value;
  }

  int index() {
    const std::int64_t v = integer();
    if (v < 1 || v > 1'000'000) throw Error(ErrorKind::BadComponentIndex, "component index " + std::to_string(v));
    return static_cast<int>(v);
  }

  LinkExpr expr() {
    const std::size_t at = (skip_ws(), pos_);
    const std::string_view w = word();
    if (w == "unknot") return LinkExpr::unknot();
    if (w == "cable") {
      expect('(');
      const std::int64_t r = integer();
      expect(',');
      const std::int64_t s = integer();
      if (s < 1) throw Error(ErrorKind::BadCableParams, "cable strand count s must be >= 1");
      expect(';');
      const int i = index();
      expect(';');
      LinkExpr child = expr();
      expect(')');
      return LinkExpr::cable(std::move(child), i, r, s);
    }
    if (w == "twist") {
      expect('(');
      const std::int64_t f = integer();
      expect(';');
      const int i = index();
      expect(';');
      LinkExpr child = expr();
      expect(')');
      return LinkExpr::twist(std::move(child), i, f);
    }
    if (w == "connsum") {
      expect('(');
      LinkExpr left = expr();
      expect(',');
      const int i = index();
      expect(';');
      LinkExpr right = expr();
      expect(',');
      const int j = index();
      expect(')');
      return LinkExpr::connsum(std::move(left), i, std::move(right), j);
    }
    pos_ = at;
    fail(w.empty() ? "expected expression" : "unknown constructor '" + std::string(w) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkExpr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const LinkExpr& e) {
  switch (e.kind()) {
    case LinkExpr::Kind::Unknot:
      return "unknot";
    case LinkExpr::Kind::Cable:
      return "cable(" + std::to_string(e.r()) + "," + std::to_string(e.s()) + ";" +
             std::to_string(e.component()) + ";" + print(e.child()) + ")";
    case LinkExpr::Kind::Twist:
      return "twist(" + std::to_string(e.f()) + ";" + std::to_string(e.component()) + ";" +
             print(e.child()) + ")";
    case LinkExpr::Kind::ConnSum:
      return "connsum(" + print(e.left()) + "," + std::to_string(e.left_component()) + ";" +
             print(e.right()) + "," + std::to_string(e.right_component()) + ")";
  }
  return {};
}

int component_count(const LinkExpr& e) { return e.component_count(); }

LinkExpr mirror_expr(const LinkExpr& e) {
  switch (e.kind()) {
    case LinkExpr::Kind::Unknot:
      return e;
    case LinkExpr::Kind::Cable:
      return LinkExpr::cable(mirror_expr(e.child()), e.component(), -e.r(), e.s());
    case LinkExpr::Kind::Twist:
      return LinkExpr::twist(mirror_expr(e.child()), e.component(), -e.f());
    case LinkExpr::Kind::ConnSum:
      return LinkExpr::connsum(mirror_expr(e.left()), e.left_component(), mirror_expr(e.right()),
                               e.right_component());
  }
  return e;
}

void validate_colors(const LinkExpr& e, const std::vector<int>& colors) {
  if (colors.size() != static_cast<std::size_t>(e.component_count()))
    throw Error(ErrorKind::ColorArityMismatch,
                "expression has " + std::to_string(e.component_count()) + " components, got " +
                    std::to_string(colors.size()) + " colors");
  for (int c : colors)
    if (c < 1) throw Error(ErrorKind::NonPositiveColor, "color " + std::to_string(c) + " is not positive");
}

}  // namespace cjp
