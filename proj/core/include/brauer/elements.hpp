#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/error.hpp"
#include "brauer/morphism.hpp"
#include "brauer/rings.hpp"

namespace brauer {

// Number of inversions, which is the Coxeter length in Sym_r.
int inversions(std::span<const int> perm);

// All permutations of {0..r-1} in lexicographic order.
std::vector<std::vector<int>> permutations(int r);

// How the legs of a square box are joined to an outer boundary.
struct BoxWiring {
  int box = 0;          // legs on each side of the box
  int outer_lower = 0;  // outer boundary size
  int outer_upper = 0;
  // Target of each box leg: bottom legs first (0..box-1), then top legs.
  // A value >= 0 is an outer node (0..outer_lower-1 bottom, then top);
  // a value -1-j joins the leg to box leg j.
  std::vector<int> target;
};

// Threads the outer wiring through `inner`, a (box, box) diagram. Throws
// ValidationError if a closed loop would arise.
Diagram wire_box(const Diagram& inner, const BoxWiring& w);

// The wiring of the symplectic kernel elements D(p, q) on a box of size
// 2n+1: p bottom legs bent up to the top, q top legs bent down, and p-q
// nested arcs on the remaining top legs.
BoxWiring d_pq_wiring(int n, int p, int q);

template <class R>
Morphism<R> from_permutation(const R& ring, const typename R::Elem& delta, std::span<const int> perm) {
  return Morphism<R>::from_diagram(ring, delta, permutation_diagram(perm));
}

// Sum over Sym_r of (-eps)^{inversions} times the permutation diagram.
template <class R>
Morphism<R> sigma(const R& ring, const typename R::Elem& delta, int eps, int r) {
  if (eps != 1 && eps != -1) throw RangeError("epsilon must be +1 or -1");
  if (r < 0) throw RangeError("sigma: negative degree");
  Morphism<R> out(ring, delta, r, r);
  const auto plus = ring.one();
  const auto minus = ring.neg(ring.one());
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const bool odd = inversions(perm) % 2 == 1;
    out.add_term(permutation_diagram(perm), (odd && eps == 1) ? minus : plus);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <class R>
Morphism<R> identity_morphism(const R& ring, const typename R::Elem& delta, int r) {
  return Morphism<R>::from_diagram(ring, delta, identity(r));
}

template <class R>
Morphism<R> tensor_identity(const Morphism<R>& x, int left, int right) {
  auto id = [&](int r) { return Morphism<R>::from_diagram(x.ring(), x.delta(), identity(r)); };
  return tensor(tensor(id(left), x), id(right));
}

// A(k, l): the total antisymmetrizer Sigma_{+1} on strands k..l (1-based) of
// B_r, identity elsewhere; the identity when k >= l.
template <class R>
Morphism<R> antisymmetrizer_block(const R& ring, const typename R::Elem& delta, int k, int l, int r) {
  if (k < 1 || l > r || k > r + 1) {
    throw RangeError("antisymmetrizer_block: need 1 <= k and l <= r");
  }
  if (k >= l) return identity_morphism(ring, delta, r);
  return tensor_identity(sigma(ring, delta, 1, l - k + 1), k - 1, r - l);
}

// Ordered product e_{a1,b1} e_{a2,b2} ... with 1-based strand labels.
template <class R>
Morphism<R> e_product(const R& ring, const typename R::Elem& delta,
                      const std::vector<std::pair<int, int>>& pairs, int r) {
  Morphism<R> out = identity_morphism(ring, delta, r);
  for (const auto& [a, b] : pairs) {
    out = compose(out, Morphism<R>::from_diagram(ring, delta,
                                                 e_pair(r, strand_index(a), strand_index(b))));
  }
  return out;
}

// e_i(j) = e_{i,i+1} e_{i-1,i+2} ... e_{i-j+1,i+j}; e_i(0) = 1.
template <class R>
Morphism<R> e_i_j(const R& ring, const typename R::Elem& delta, int i, int j, int r) {
  if (j < 0 || i - j + 1 < 1 || i + j > r) {
    throw RangeError("e_i(j): strands out of range");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int t = 0; t < j; ++t) pairs.emplace_back(i - t, i + 1 + t);
  return e_product(ring, delta, pairs, r);
}

// F_p = A(1, p) A(p+1, m+1) in B_{m+1}.
template <class R>
Morphism<R> f_p(const R& ring, const typename R::Elem& delta, int m, int p) {
  if (p < 0 || p > m + 1) throw RangeError("F_p: p outside 0..m+1");
  const int r = m + 1;
  return compose(antisymmetrizer_block(ring, delta, 1, p, r),
                 antisymmetrizer_block(ring, delta, p + 1, r, r));
}

// E_p in B_{m+1}(m): every term of Sigma_{+1}(m+1) with its rightmost m+1-p
// strands bent around the right edge.
template <class R>
Morphism<R> e_p_rotation(const R& ring, const typename R::Elem& delta, int m, int p) {
  if (m < 1 || p < 0 || p > m + 1) throw RangeError("E_p: need m >= 1 and 0 <= p <= m+1");
  const auto s = sigma(ring, delta, 1, m + 1);
  return map_diagrams(s, m + 1, m + 1, [&](const Diagram& d) { return rotate_right(d, m + 1 - p); });
}

// D(p, q) in B_{2n+1-p+q}, from Sigma_{-1}(2n+1).
template <class R>
Morphism<R> d_pq(const R& ring, const typename R::Elem& delta, int n, int p, int q) {
  const BoxWiring w = d_pq_wiring(n, p, q);
  const auto s = sigma(ring, delta, -1, w.box);
  return map_diagrams(s, w.outer_lower, w.outer_upper,
                      [&](const Diagram& d) { return wire_box(d, w); });
}

// The symplectic kernel generator in B_{n+1}(-2n).
Morphism<RationalField> phi(int n);

// Xi_k = Sigma(n+1) E(k) Sigma(n+1), with E(k) = prod_{j=1..k} e_{n+2-2j}.
Morphism<RationalField> xi(int n, int k);

// The closed formula for E_i in B_{m+1}(m) over the rationals.
Morphism<RationalField> e_p_formula(int m, int i);

}  // namespace brauer
