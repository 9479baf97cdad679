#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace brauer {

// A (k, l) Brauer diagram: a perfect matching on k bottom and l top nodes.
//
// Nodes are numbered 0..k-1 along the bottom row (left to right) followed by
// k..k+l-1 along the top row (left to right). The matching is stored as a
// partner table, which is already a canonical form: two diagrams are equal
// exactly when their valencies and partner tables agree.
class Diagram {
 public:
  using Pair = std::pair<int, int>;

  // The empty (0, 0) diagram.
  Diagram() = default;

  // Validates and canonicalizes. Throws ValidationError unless `pairs`
  // covers every node of {0, ..., k+l-1} exactly once.
  Diagram(int lower_count, int upper_count, std::span<const Pair> pairs);
  Diagram(int lower_count, int upper_count, std::initializer_list<Pair> pairs)
      : Diagram(lower_count, upper_count,
                std::span<const Pair>(pairs.begin(), pairs.size())) {}

  // Builds from a partner table without revalidating beyond a cheap check.
  static Diagram from_partners(int lower_count, int upper_count,
                               std::vector<int> partner);

  int lower_count() const { return lower_; }
  int upper_count() const { return upper_; }
  int node_count() const { return lower_ + upper_; }
  int partner(int node) const { return partner_[static_cast<std::size_t>(node)]; }
  const std::vector<int>& partners() const { return partner_; }

  bool is_bottom(int node) const { return node < lower_; }
  int top_node(int position) const { return lower_ + position; }

  // Pairs (min, max), sorted lexicographically.
  std::vector<Pair> pairs() const;

  // Number of arcs joining a bottom node to a top node.
  int through_count() const;

  bool is_square() const { return lower_ == upper_; }
  bool is_permutation() const { return is_square() && through_count() == lower_; }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b);

  std::string to_string() const;

 private:
  int lower_ = 0;
  int upper_ = 0;
  std::vector<int> partner_;
};

// delta^N * D, the value of a word in the generators.
struct ScaledDiagram {
  int delta_power = 0;
  Diagram diagram;

  friend bool operator==(const ScaledDiagram&, const ScaledDiagram&) = default;
};

struct Composite {
  int loops = 0;
  Diagram diagram;

  friend bool operator==(const Composite&, const Composite&) = default;
};

// Converts a 1-based strand label to the 0-based node position used here.
constexpr int strand_index(int one_based) { return one_based - 1; }

Diagram make_diagram(int k, int l, std::span<const Diagram::Pair> pairs);

// `upper` sits on top of `lower`; requires upper.lower_count() ==
// lower.upper_count(). Returns the residual diagram and the number of closed
// loops removed.
Composite compose(const Diagram& upper, const Diagram& lower);

// Juxtaposition; `left` occupies the left nodes of both rows.
Diagram tensor(const Diagram& left, const Diagram& right);
Diagram tensor_power(const Diagram& d, int times);

// Reflection in a horizontal line: (k, l) -> (l, k).
Diagram star(const Diagram& d);
// Reflection in a vertical line.
Diagram sharp(const Diagram& d);
// star(sharp(d)); restricts to an anti-involution of each B_r.
Diagram ast(const Diagram& d);

Diagram identity(int r);
Diagram crossing();
Diagram cap();
Diagram cup();
// 1-based i as in the usual presentation, 1 <= i <= r-1.
Diagram s_i(int r, int i);
Diagram e_i(int r, int i);
// Bottom arc {a, b}, top arc {a, b}, identity elsewhere (0-based a < b).
Diagram e_pair(int r, int a, int b);
// The first s bottom strands cross over to the last s top positions.
Diagram x_block(int s, int t);
// q nested caps, (2q, 0).
Diagram a_nest(int q);
// q nested cups, (0, 2q).
Diagram u_nest(int q);
// Bottom node i is joined to top node perm[i].
Diagram permutation_diagram(std::span<const int> perm);

// (D (x) I) o (I^{k-1} (x) U), valency (k-1, l+1).
Diagram raise(const Diagram& d);
// (I^{l-1} (x) A) o (D (x) I), valency (k+1, l-1).
Diagram lower(const Diagram& d);

// Bends the rightmost p strands of a square diagram around its right edge:
// for i = 1..p the top node at position r-p+i moves to bottom position
// r+1-i and vice versa (1-based positions).
Diagram rotate_right(const Diagram& d, int p);

// All (k, l) diagrams in a fixed order: the smallest free node is matched
// with each larger free node in increasing order.
std::vector<Diagram> enumerate_diagrams(int k, int l);
long long diagram_count(int k, int l);

// Interleaving arc pairs in the circular order bottom 0..k-1, then top l-1..0.
int crossing_count(const Diagram& d);

// Loops of A_r o (D (x) I_r) o U_r for a square diagram D.
int closure_loops(const Diagram& d);

void to_json(nlohmann::json& j, const Diagram& d);
void from_json(const nlohmann::json& j, Diagram& d);

}  // namespace brauer
