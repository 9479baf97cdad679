#pragma once

#include <cstdint>
#include <string>

#include "brauer/diagram.hpp"
#include "brauer/morphism.hpp"
#include "brauer/report.hpp"
#include "brauer/rings.hpp"

namespace brauer {

// Short printable form for reports; long sums are abbreviated.
template <class R>
std::string summarize(const Morphism<R>& x, std::size_t limit = 240) {
  std::string s = x.to_string();
  if (s.size() > limit) {
    s = s.substr(0, limit) + "... (" + std::to_string(x.size()) + " terms)";
  }
  return s;
}

template <class R>
CheckRecord check_morphisms(std::string name, const Morphism<R>& computed, const Morphism<R>& expected) {
  CheckRecord c{std::move(name), summarize(expected), summarize(computed), computed == expected};
  if (!c.pass && c.expected == c.computed) c.computed += " [differs]";
  return c;
}

// eps^r * sum_D coeff(D) * delta^{closure_loops(D)}.
template <class R>
typename R::Elem jones_trace_symbolic(const Morphism<R>& x, int eps) {
  if (x.lower_count() != x.upper_count()) throw ValencyError("jones trace needs a square morphism");
  const R& ring = x.ring();
  auto total = ring.zero();
  for (const auto& [d, c] : x.terms()) {
    total = ring.add(total, ring.mul(c, ring_pow(ring, x.delta(), closure_loops(d))));
  }
  if (eps == -1 && x.lower_count() % 2 == 1) total = ring.neg(total);
  return total;
}

bool integrality_check(const Morphism<RationalField>& x);
// Requires integral coefficients and loop value.
Morphism<IntegerRing> to_integer(const Morphism<RationalField>& x);
// Throws ValidationError on a non-integral coefficient.
Morphism<PrimeField> reduce_mod_p(const Morphism<RationalField>& x, std::uint64_t p);
Morphism<RationalField> specialize_delta(const Morphism<DeltaPolyRing>& x, const mpq_class& value);

// The defining relations of B_r(delta) over QQ[d], the relation
// e_i s_{i+1} e_i = e_i and its transform, the permutation subalgebra, and
// the anti-involution ast.
Report verify_brauer_presentation(int r);

// Recursion, capped trace and cap expansion of Sigma_eps(r) over QQ[d].
Report verify_sigma_identities(int r, int eps);
// The cap-against-cups identity for Sigma_{-1}(r) with k adjacent cups.
Report verify_sigma_cap(int r, int k);
// Cap applied to F_i against k nested cups, in B_{m+1}(m).
Report verify_afu(int m, int i, int k);

}  // namespace brauer
