#pragma once

#include "ramsey/graph.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace ramsey {

/// Symbolic graph expression.
///
/// Leaves: K<n> complete, P<n> path, S<n> star K_{1,n}, B<n> book K_2+nK_1,
/// F<n> fan K_1+nK_2, M<n> matching nK_2, E<n> empty nK_1.
/// Operators, loosest binding first: `u` union, `+` join, `\` minus,
/// `<k>*` copies. Binary operators are left-associative.
class GraphSpec {
public:
  enum class Kind {
    Complete,
    Path,
    Star,
    Book,
    Fan,
    Matching,
    Empty,
    Join,
    Union,
    Copies,
    Minus
  };

  static GraphSpec complete(int n) { return leaf(Kind::Complete, n); }
  static GraphSpec path(int n) { return leaf(Kind::Path, n); }
  static GraphSpec star(int n) { return leaf(Kind::Star, n); }
  static GraphSpec book(int m) { return leaf(Kind::Book, m); }
  static GraphSpec fan(int n) { return leaf(Kind::Fan, n); }
  static GraphSpec matching(int m) { return leaf(Kind::Matching, m); }
  static GraphSpec empty(int n) { return leaf(Kind::Empty, n); }
  static GraphSpec join(GraphSpec a, GraphSpec b);
  static GraphSpec disjoint_union(GraphSpec a, GraphSpec b);
  static GraphSpec copies(int k, GraphSpec a);
  /// `host` with the edges of `deleted` removed, `deleted` placed on the
  /// lowest-indexed vertices.
  static GraphSpec minus(GraphSpec host, GraphSpec deleted);

  Kind kind() const { return kind_; }
  bool is_leaf() const;
  /// Leaf size parameter, or the copy count for Copies.
  int parameter() const { return parameter_; }
  const GraphSpec &left() const { return *left_; }
  const GraphSpec &right() const { return *right_; }
  /// The operand of Copies.
  const GraphSpec &operand() const { return *left_; }

  /// Vertex count of the realized graph (may exceed kMaxOrder).
  long long order() const;

  friend bool operator==(const GraphSpec &a, const GraphSpec &b);

private:
  static GraphSpec leaf(Kind kind, int n);

  Kind kind_ = Kind::Empty;
  int parameter_ = 1;
  std::shared_ptr<const GraphSpec> left_;
  std::shared_ptr<const GraphSpec> right_;
};

/// Parse the spec grammar. Throws SpecError on syntax errors, zero
/// parameters and oversize Minus deletions.
GraphSpec parse_spec(std::string_view text);

/// Print in the same grammar; parse_spec(to_string(s)) == s.
std::string to_string(const GraphSpec &spec);

/// Canonical vertex-labeled realization: left operands take the lower
/// indices, leaves use the layouts below.
///   Path(n): 0-1-...-(n-1)      Star(n): center 0
///   Book(m): spine 0-1          Fan(n): center 0, rungs (1,2),(3,4),...
///   Matching(m): (0,1),(2,3),...
/// Throws LimitError if the order exceeds kMaxOrder.
Graph realize(const GraphSpec &spec);

} // namespace ramsey
