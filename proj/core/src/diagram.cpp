#include "brauer/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "brauer/error.hpp"

namespace brauer {

Diagram::Diagram(int lower_count, int upper_count, std::span<const Pair> pairs)
    : lower_(lower_count), upper_(upper_count) {
  if (lower_count < 0 || upper_count < 0) {
    throw ValidationError("diagram node counts must be nonnegative");
  }
  const int n = lower_count + upper_count;
  if (n % 2 != 0) {
    throw ValidationError("diagram with an odd number of nodes has no perfect matching");
  }
  if (static_cast<int>(pairs.size()) * 2 != n) {
    throw ValidationError("expected " + std::to_string(n / 2) + " pairs, got " +
                          std::to_string(pairs.size()));
  }
  partner_.assign(static_cast<std::size_t>(n), -1);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ValidationError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                            ") out of node range");
    }
    if (a == b) throw ValidationError("pair joins a node to itself");
    if (partner_[a] != -1 || partner_[b] != -1) {
      throw ValidationError("node occurs in more than one pair");
    }
    partner_[a] = b;
    partner_[b] = a;
  }
}

Diagram Diagram::from_partners(int lower_count, int upper_count, std::vector<int> partner) {
  Diagram d;
  d.lower_ = lower_count;
  d.upper_ = upper_count;
  d.partner_ = std::move(partner);
  if (static_cast<int>(d.partner_.size()) != lower_count + upper_count) {
    throw ValidationError("partner table size does not match node count");
  }
  return d;
}

std::vector<Diagram::Pair> Diagram::pairs() const {
  std::vector<Pair> out;
  out.reserve(partner_.size() / 2);
  for (int i = 0; i < node_count(); ++i) {
    if (partner_[i] > i) out.emplace_back(i, partner_[i]);
  }
  return out;
}

int Diagram::through_count() const {
  int count = 0;
  for (int i = 0; i < lower_; ++i) {
    if (partner_[i] >= lower_) ++count;
  }
  return count;
}

std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
  if (auto c = a.lower_ <=> b.lower_; c != 0) return c;
  if (auto c = a.upper_ <=> b.upper_; c != 0) return c;
  return a.partner_ <=> b.partner_;
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << "(" << lower_ << "," << upper_ << ")[";
  bool first = true;
  for (const auto& [a, b] : pairs()) {
    if (!first) os << ",";
    first = false;
    os << a << "-" << b;
  }
  os << "]";
  return os.str();
}

Diagram make_diagram(int k, int l, std::span<const Diagram::Pair> pairs) {
  return Diagram(k, l, pairs);
}

Composite compose(const Diagram& upper, const Diagram& lower) {
  const int mid = lower.upper_count();
  if (upper.lower_count() != mid) {
    throw ValencyError("cannot compose: upper diagram has " +
                       std::to_string(upper.lower_count()) + " bottom nodes but lower has " +
                       std::to_string(mid) + " top nodes");
  }
  const int k = lower.lower_count();
  const int p = upper.upper_count();
  std::vector<int> partner(static_cast<std::size_t>(k + p), -1);
  std::vector<char> mid_seen(static_cast<std::size_t>(mid), 0);

  // Walk from an outer endpoint until the path leaves through another outer
  // endpoint. Outer nodes: lower's bottom row (result 0..k-1) and upper's top
  // row (result k..k+p-1).
  auto walk = [&](bool in_lower, int node) -> int {
    while (true) {
      if (in_lower) {
        const int q = lower.partner(node);
        if (q < k) return q;
        const int m = q - k;
        mid_seen[m] = 1;
        in_lower = false;
        node = m;  // bottom node m of upper
      } else {
        const int q = upper.partner(node);
        if (q >= mid) return k + (q - mid);
        mid_seen[q] = 1;
        in_lower = true;
        node = k + q;  // top node q of lower
      }
    }
  };

  for (int i = 0; i < k; ++i) {
    if (partner[i] != -1) continue;
    const int j = walk(true, i);
    partner[i] = j;
    partner[j] = i;
  }
  for (int t = 0; t < p; ++t) {
    const int node = k + t;
    if (partner[node] != -1) continue;
    const int j = walk(false, mid + t);
    partner[node] = j;
    partner[j] = node;
  }

  int loops = 0;
  for (int m = 0; m < mid; ++m) {
    if (mid_seen[m]) continue;
    ++loops;
    // Alternate lower-arc / upper-arc steps until back at m.
    int cur = m;
    do {
      mid_seen[cur] = 1;
      const int q = lower.partner(k + cur) - k;  // lower arc joins two middle nodes
      mid_seen[q] = 1;
      cur = upper.partner(q);
    } while (cur != m);
  }
  return {loops, Diagram::from_partners(k, p, std::move(partner))};
}

Diagram tensor(const Diagram& left, const Diagram& right) {
  const int k = left.lower_count(), l = left.upper_count();
  const int k2 = right.lower_count(), l2 = right.upper_count();
  const int bottom = k + k2;
  auto map_left = [&](int node) { return node < k ? node : bottom + (node - k); };
  auto map_right = [&](int node) { return node < k2 ? k + node : bottom + l + (node - k2); };
  std::vector<int> partner(static_cast<std::size_t>(bottom + l + l2));
  for (int i = 0; i < left.node_count(); ++i) partner[map_left(i)] = map_left(left.partner(i));
  for (int i = 0; i < right.node_count(); ++i) {
    partner[map_right(i)] = map_right(right.partner(i));
  }
  return Diagram::from_partners(bottom, l + l2, std::move(partner));
}

Diagram tensor_power(const Diagram& d, int times) {
  Diagram out;
  for (int i = 0; i < times; ++i) out = tensor(out, d);
  return out;
}

namespace {

template <class Map>
Diagram relabel(const Diagram& d, int new_lower, int new_upper, Map map) {
  std::vector<int> partner(static_cast<std::size_t>(d.node_count()));
  for (int i = 0; i < d.node_count(); ++i) partner[map(i)] = map(d.partner(i));
  return Diagram::from_partners(new_lower, new_upper, std::move(partner));
}

}  // namespace

Diagram star(const Diagram& d) {
  const int k = d.lower_count(), l = d.upper_count();
  return relabel(d, l, k, [&](int node) { return node < k ? l + node : node - k; });
}

Diagram sharp(const Diagram& d) {
  const int k = d.lower_count(), l = d.upper_count();
  return relabel(d, k, l, [&](int node) {
    return node < k ? k - 1 - node : k + (l - 1 - (node - k));
  });
}

Diagram ast(const Diagram& d) { return star(sharp(d)); }

Diagram identity(int r) {
  if (r < 0) throw RangeError("identity: negative strand count");
  std::vector<int> partner(static_cast<std::size_t>(2 * r));
  for (int i = 0; i < r; ++i) {
    partner[i] = r + i;
    partner[r + i] = i;
  }
  return Diagram::from_partners(r, r, std::move(partner));
}

Diagram crossing() { return Diagram(2, 2, {{0, 3}, {1, 2}}); }
Diagram cap() { return Diagram(2, 0, {{0, 1}}); }
Diagram cup() { return Diagram(0, 2, {{0, 1}}); }

Diagram s_i(int r, int i) {
  if (i < 1 || i > r - 1) {
    throw RangeError("s_i: index " + std::to_string(i) + " outside 1.." + std::to_string(r - 1));
  }
  const int a = strand_index(i);
  return tensor(tensor(identity(a), crossing()), identity(r - a - 2));
}

Diagram e_i(int r, int i) {
  if (i < 1 || i > r - 1) {
    throw RangeError("e_i: index " + std::to_string(i) + " outside 1.." + std::to_string(r - 1));
  }
  return e_pair(r, strand_index(i), strand_index(i) + 1);
}

Diagram e_pair(int r, int a, int b) {
  if (a < 0 || b <= a || b > r - 1) {
    throw RangeError("e_pair: need 0 <= a < b <= r-1");
  }
  std::vector<int> partner(static_cast<std::size_t>(2 * r));
  for (int i = 0; i < r; ++i) {
    if (i == a || i == b) continue;
    partner[i] = r + i;
    partner[r + i] = i;
  }
  partner[a] = b;
  partner[b] = a;
  partner[r + a] = r + b;
  partner[r + b] = r + a;
  return Diagram::from_partners(r, r, std::move(partner));
}

Diagram x_block(int s, int t) {
  if (s < 0 || t < 0) throw RangeError("x_block: negative block size");
  std::vector<int> perm(static_cast<std::size_t>(s + t));
  for (int i = 0; i < s; ++i) perm[i] = t + i;
  for (int j = 0; j < t; ++j) perm[s + j] = j;
  return permutation_diagram(perm);
}

Diagram a_nest(int q) {
  if (q < 0) throw RangeError("a_nest: negative size");
  std::vector<int> partner(static_cast<std::size_t>(2 * q));
  for (int i = 0; i < 2 * q; ++i) partner[i] = 2 * q - 1 - i;
  return Diagram::from_partners(2 * q, 0, std::move(partner));
}

Diagram u_nest(int q) { return star(a_nest(q)); }

Diagram permutation_diagram(std::span<const int> perm) {
  const int r = static_cast<int>(perm.size());
  std::vector<int> partner(static_cast<std::size_t>(2 * r), -1);
  for (int i = 0; i < r; ++i) {
    const int target = perm[i];
    if (target < 0 || target >= r || partner[r + target] != -1) {
      throw ValidationError("permutation_diagram: input is not a permutation");
    }
    partner[i] = r + target;
    partner[r + target] = i;
  }
  return Diagram::from_partners(r, r, std::move(partner));
}

Diagram raise(const Diagram& d) {
  const int k = d.lower_count();
  if (k < 1) throw RangeError("raise: diagram has no bottom node");
  auto c = compose(tensor(d, identity(1)), tensor(identity(k - 1), cup()));
  return c.diagram;
}

Diagram lower(const Diagram& d) {
  const int l = d.upper_count();
  if (l < 1) throw RangeError("lower: diagram has no top node");
  auto c = compose(tensor(identity(l - 1), cap()), tensor(d, identity(1)));
  return c.diagram;
}

Diagram rotate_right(const Diagram& d, int p) {
  if (!d.is_square()) throw ValencyError("rotate_right: diagram is not square");
  const int r = d.lower_count();
  if (p < 0 || p > r) throw RangeError("rotate_right: p outside 0..r");
  // 0-based: position r-p+i-1 on one row maps to position r-i on the other.
  auto map = [&](int node) {
    const bool bottom = node < r;
    const int pos = bottom ? node : node - r;
    if (pos < r - p) return node;
    const int i = pos - (r - p) + 1;
    const int new_pos = r - i;
    return bottom ? r + new_pos : new_pos;
  };
  return relabel(d, r, r, map);
}

namespace {

void enumerate_rec(std::vector<int>& partner, int k, int l, std::vector<Diagram>& out) {
  const int n = static_cast<int>(partner.size());
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (partner[i] == -1) {
      first = i;
      break;
    }
  }
  if (first == -1) {
    out.push_back(Diagram::from_partners(k, l, partner));
    return;
  }
  for (int j = first + 1; j < n; ++j) {
    if (partner[j] != -1) continue;
    partner[first] = j;
    partner[j] = first;
    enumerate_rec(partner, k, l, out);
    partner[first] = -1;
    partner[j] = -1;
  }
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(int k, int l) {
  std::vector<Diagram> out;
  if (k < 0 || l < 0 || (k + l) % 2 != 0) return out;
  std::vector<int> partner(static_cast<std::size_t>(k + l), -1);
  out.reserve(static_cast<std::size_t>(diagram_count(k, l)));
  enumerate_rec(partner, k, l, out);
  return out;
}

long long diagram_count(int k, int l) {
  const int n = k + l;
  if (k < 0 || l < 0 || n % 2 != 0) return 0;
  long long c = 1;
  for (int i = n - 1; i > 0; i -= 2) c *= i;
  return c;
}

int crossing_count(const Diagram& d) {
  const int k = d.lower_count(), l = d.upper_count();
  auto pos = [&](int node) { return node < k ? node : k + (l - 1 - (node - k)); };
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [a, b] : d.pairs()) {
    int pa = pos(a), pb = pos(b);
    if (pa > pb) std::swap(pa, pb);
    arcs.emplace_back(pa, pb);
  }
  int count = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const auto [a, b] = arcs[i];
      const auto [c, e] = arcs[j];
      if ((a < c && c < b && b < e) || (c < a && a < e && e < b)) ++count;
    }
  }
  return count;
}

int closure_loops(const Diagram& d) {
  if (!d.is_square()) throw ValencyError("closure_loops: diagram is not square");
  const int r = d.lower_count();
  const auto inner = compose(tensor(d, identity(r)), u_nest(r));
  const auto outer = compose(a_nest(r), inner.diagram);
  return inner.loops + outer.loops;
}

void to_json(nlohmann::json& j, const Diagram& d) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : d.pairs()) pairs.push_back({a, b});
  j = nlohmann::json{{"k", d.lower_count()}, {"l", d.upper_count()}, {"pairs", pairs}};
}

void from_json(const nlohmann::json& j, Diagram& d) {
  if (!j.is_object() || !j.contains("k") || !j.contains("l") || !j.contains("pairs")) {
    throw ValidationError("diagram JSON needs fields k, l, pairs");
  }
  std::vector<Diagram::Pair> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw ValidationError("each pair must be [a, b]");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  d = Diagram(j.at("k").get<int>(), j.at("l").get<int>(), pairs);
}

}  // namespace brauer
