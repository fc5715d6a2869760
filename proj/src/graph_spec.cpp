#include "ramsey/graph_spec.hpp"

#include "ramsey/errors.hpp"

#include <cctype>
#include <limits>

namespace ramsey {

GraphSpec GraphSpec::leaf(Kind kind, int n) {
  if (n < 1)
    throw SpecError("leaf parameter must be at least 1", 0);
  GraphSpec s;
  s.kind_ = kind;
  s.parameter_ = n;
  return s;
}

GraphSpec GraphSpec::join(GraphSpec a, GraphSpec b) {
  GraphSpec s;
  s.kind_ = Kind::Join;
  s.left_ = std::make_shared<const GraphSpec>(std::move(a));
  s.right_ = std::make_shared<const GraphSpec>(std::move(b));
  return s;
}

GraphSpec GraphSpec::disjoint_union(GraphSpec a, GraphSpec b) {
  GraphSpec s = join(std::move(a), std::move(b));
  s.kind_ = Kind::Union;
  return s;
}

GraphSpec GraphSpec::copies(int k, GraphSpec a) {
  if (k < 1)
    throw SpecError("copy count must be at least 1", 0);
  GraphSpec s;
  s.kind_ = Kind::Copies;
  s.parameter_ = k;
  s.left_ = std::make_shared<const GraphSpec>(std::move(a));
  return s;
}

GraphSpec GraphSpec::minus(GraphSpec host, GraphSpec deleted) {
  if (deleted.order() > host.order())
    throw SpecError("deleted subgraph has more vertices than the host", 0);
  GraphSpec s = join(std::move(host), std::move(deleted));
  s.kind_ = Kind::Minus;
  return s;
}

bool GraphSpec::is_leaf() const {
  switch (kind_) {
  case Kind::Join:
  case Kind::Union:
  case Kind::Copies:
  case Kind::Minus:
    return false;
  default:
    return true;
  }
}

long long GraphSpec::order() const {
  const long long n = parameter_;
  switch (kind_) {
  case Kind::Complete:
  case Kind::Path:
  case Kind::Empty:
    return n;
  case Kind::Star:
    return n + 1;
  case Kind::Book:
    return n + 2;
  case Kind::Fan:
    return 2 * n + 1;
  case Kind::Matching:
    return 2 * n;
  case Kind::Join:
  case Kind::Union:
    return left_->order() + right_->order();
  case Kind::Copies:
    return n * left_->order();
  case Kind::Minus:
    return left_->order();
  }
  return 0;
}

bool operator==(const GraphSpec &a, const GraphSpec &b) {
  if (a.kind_ != b.kind_)
    return false;
  if (a.is_leaf())
    return a.parameter_ == b.parameter_;
  if (a.kind_ == GraphSpec::Kind::Copies)
    return a.parameter_ == b.parameter_ && *a.left_ == *b.left_;
  return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

namespace {

// union := join ('u' join)*
// join  := minus ('+' minus)*
// minus := copies ('\' copies)*
// copies := INT '*' copies | atom
// atom  := LEAF INT | '(' union ')'
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphSpec parse() {
    GraphSpec s = parse_union();
    skip_space();
    if (pos_ != text_.size())
      throw SpecError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return s;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  int parse_int() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max())
        throw SpecError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start)
      throw SpecError("expected integer", start);
    if (value == 0)
      throw SpecError("parameter must be at least 1", start);
    return static_cast<int>(value);
  }

  GraphSpec parse_union() {
    GraphSpec s = parse_join();
    while (accept('u'))
      s = GraphSpec::disjoint_union(std::move(s), parse_join());
    return s;
  }

  GraphSpec parse_join() {
    GraphSpec s = parse_minus();
    while (accept('+'))
      s = GraphSpec::join(std::move(s), parse_minus());
    return s;
  }

  GraphSpec parse_minus() {
    GraphSpec s = parse_copies();
    while (accept('\\')) {
      const std::size_t at = pos_;
      GraphSpec deleted = parse_copies();
      if (deleted.order() > s.order())
        throw SpecError("deleted subgraph has more vertices than the host",
                        at);
      s = GraphSpec::minus(std::move(s), std::move(deleted));
    }
    return s;
  }

  GraphSpec parse_copies() {
    if (at_digit()) {
      const int k = parse_int();
      if (!accept('*'))
        throw SpecError("expected '*' after copy count", pos_);
      return GraphSpec::copies(k, parse_copies());
    }
    return parse_atom();
  }

  GraphSpec parse_atom() {
    skip_space();
    if (pos_ >= text_.size())
      throw SpecError("unexpected end of input", pos_);
    if (accept('(')) {
      GraphSpec s = parse_union();
      if (!accept(')'))
        throw SpecError("expected ')'", pos_);
      return s;
    }
    const char c = text_[pos_];
    const std::size_t at = pos_++;
    switch (c) {
    case 'K':
      return GraphSpec::complete(parse_int());
    case 'P':
      return GraphSpec::path(parse_int());
    case 'S':
      return GraphSpec::star(parse_int());
    case 'B':
      return GraphSpec::book(parse_int());
    case 'F':
      return GraphSpec::fan(parse_int());
    case 'M':
      return GraphSpec::matching(parse_int());
    case 'E':
      return GraphSpec::empty(parse_int());
    default:
      throw SpecError(std::string("unexpected '") + c + "'", at);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer; higher binds tighter.
int precedence(GraphSpec::Kind k) {
  switch (k) {
  case GraphSpec::Kind::Union:
    return 1;
  case GraphSpec::Kind::Join:
    return 2;
  case GraphSpec::Kind::Minus:
    return 3;
  case GraphSpec::Kind::Copies:
    return 4;
  default:
    return 5;
  }
}

std::string print(const GraphSpec &s, int min_prec) {
  std::string out;
  const auto wrap = [&](const GraphSpec &sub, int need) {
    return print(sub, need);
  };
  switch (s.kind()) {
  case GraphSpec::Kind::Complete:
    out = "K" + std::to_string(s.parameter());
    break;
  case GraphSpec::Kind::Path:
    out = "P" + std::to_string(s.parameter());
    break;
  case GraphSpec::Kind::Star:
    out = "S" + std::to_string(s.parameter());
    break;
  case GraphSpec::Kind::Book:
    out = "B" + std::to_string(s.parameter());
    break;
  case GraphSpec::Kind::Fan:
    out = "F" + std::to_string(s.parameter());
    break;
  case GraphSpec::Kind::Matching:
    out = "M" + std::to_string(s.parameter());
    break;
  case GraphSpec::Kind::Empty:
    out = "E" + std::to_string(s.parameter());
    break;
  case GraphSpec::Kind::Copies:
    out = std::to_string(s.parameter()) + "*" + wrap(s.operand(), 4);
    break;
  case GraphSpec::Kind::Union:
    out = wrap(s.left(), 1) + " u " + wrap(s.right(), 2);
    break;
  case GraphSpec::Kind::Join:
    out = wrap(s.left(), 2) + "+" + wrap(s.right(), 3);
    break;
  case GraphSpec::Kind::Minus:
    out = wrap(s.left(), 3) + "\\" + wrap(s.right(), 4);
    break;
  }
  if (precedence(s.kind()) < min_prec)
    return "(" + out + ")";
  return out;
}

void place(const GraphSpec &s, GraphBuilder &b, int base) {
  const int n = s.parameter();
  switch (s.kind()) {
  case GraphSpec::Kind::Complete:
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        b.add_edge(base + u, base + v);
    break;
  case GraphSpec::Kind::Path:
    for (int v = 0; v + 1 < n; ++v)
      b.add_edge(base + v, base + v + 1);
    break;
  case GraphSpec::Kind::Star:
    for (int v = 1; v <= n; ++v)
      b.add_edge(base, base + v);
    break;
  case GraphSpec::Kind::Book:
    b.add_edge(base, base + 1);
    for (int v = 2; v < n + 2; ++v) {
      b.add_edge(base, base + v);
      b.add_edge(base + 1, base + v);
    }
    break;
  case GraphSpec::Kind::Fan:
    for (int r = 0; r < n; ++r) {
      const int a = base + 1 + 2 * r;
      b.add_edge(base, a);
      b.add_edge(base, a + 1);
      b.add_edge(a, a + 1);
    }
    break;
  case GraphSpec::Kind::Matching:
    for (int r = 0; r < n; ++r)
      b.add_edge(base + 2 * r, base + 2 * r + 1);
    break;
  case GraphSpec::Kind::Empty:
    break;
  case GraphSpec::Kind::Union:
    place(s.left(), b, base);
    place(s.right(), b, base + static_cast<int>(s.left().order()));
    break;
  case GraphSpec::Kind::Join: {
    const int split = base + static_cast<int>(s.left().order());
    const int end = base + static_cast<int>(s.order());
    place(s.left(), b, base);
    place(s.right(), b, split);
    for (int u = base; u < split; ++u)
      for (int v = split; v < end; ++v)
        b.add_edge(u, v);
    break;
  }
  case GraphSpec::Kind::Copies: {
    const int size = static_cast<int>(s.operand().order());
    for (int k = 0; k < n; ++k)
      place(s.operand(), b, base + k * size);
    break;
  }
  case GraphSpec::Kind::Minus: {
    place(s.left(), b, base);
    const Graph deleted = realize(s.right());
    for (auto [u, v] : deleted.edges())
      b.remove_edge(base + u, base + v);
    break;
  }
  }
}

} // namespace

GraphSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GraphSpec &spec) { return print(spec, 0); }

Graph realize(const GraphSpec &spec) {
  const long long n = spec.order();
  if (n > kMaxOrder)
    throw LimitError("realized order " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxOrder));
  GraphBuilder b(static_cast<int>(n));
  place(spec, b, 0);
  return b.build();
}

} // namespace ramsey
