#include "brauer/identities.hpp"

#include "brauer/elements.hpp"

namespace brauer {

bool integrality_check(const Morphism<RationalField>& x) {
  for (const auto& [d, c] : x.terms()) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Morphism<IntegerRing> to_integer(const Morphism<RationalField>& x) {
  const IntegerRing zz;
  return change_ring(x, zz, zz.from_rational(x.delta()),
                     [&](const mpq_class& c) { return zz.from_rational(c); });
}

Morphism<PrimeField> reduce_mod_p(const Morphism<RationalField>& x, std::uint64_t p) {
  if (!integrality_check(x)) {
    throw ValidationError("reduce_mod_p: morphism has non-integral coefficients");
  }
  const PrimeField fp(p);
  return change_ring(x, fp, fp.from_rational(x.delta()),
                     [&](const mpq_class& c) { return fp.from_rational(c); });
}

Morphism<RationalField> specialize_delta(const Morphism<DeltaPolyRing>& x, const mpq_class& value) {
  return change_ring(x, RationalField{}, x.delta().evaluate(value),
                     [&](const Poly& c) { return c.evaluate(value); });
}

namespace {

using PM = Morphism<DeltaPolyRing>;

struct Symbolic {
  DeltaPolyRing ring;
  Poly delta = DeltaPolyRing{}.indeterminate();

  PM unit(const Diagram& d) const { return PM::from_diagram(ring, delta, d); }
  PM id(int r) const { return unit(identity(r)); }
  PM s(int r, int i) const { return unit(s_i(r, i)); }
  PM e(int r, int i) const { return unit(e_i(r, i)); }
  PM scalar(const Poly& c, const PM& x) const { return x.scaled(c); }
};

std::string idx(const std::string& base, int r, int i, int j = -1) {
  std::string s = base + " r=" + std::to_string(r) + " i=" + std::to_string(i);
  if (j >= 0) s += " j=" + std::to_string(j);
  return s;
}

}  // namespace

Report verify_brauer_presentation(int r) {
  Report out;
  const Symbolic z;
  for (int i = 1; i < r; ++i) {
    const PM si = z.s(r, i), ei = z.e(r, i);
    out.push_back(check_morphisms(idx("s_i^2 = 1", r, i), si * si, z.id(r)));
    out.push_back(check_morphisms(idx("s_i e_i = e_i", r, i), si * ei, ei));
    out.push_back(check_morphisms(idx("e_i s_i = e_i", r, i), ei * si, ei));
    out.push_back(check_morphisms(idx("e_i^2 = d e_i", r, i), ei * ei, ei.scaled(z.delta)));
    for (int j = 1; j < r; ++j) {
      const PM sj = z.s(r, j), ej = z.e(r, j);
      if (std::abs(i - j) >= 2) {
        out.push_back(check_morphisms(idx("s_i s_j = s_j s_i", r, i, j), si * sj, sj * si));
        out.push_back(check_morphisms(idx("s_i e_j = e_j s_i", r, i, j), si * ej, ej * si));
        out.push_back(check_morphisms(idx("e_i e_j = e_j e_i", r, i, j), ei * ej, ej * ei));
      }
      if (std::abs(i - j) == 1) {
        out.push_back(check_morphisms(idx("e_i e_j e_i = e_i", r, i, j), ei * ej * ei, ei));
      }
    }
    if (i + 1 < r) {
      const PM s1 = z.s(r, i + 1), e1 = z.e(r, i + 1);
      out.push_back(check_morphisms(idx("braid s_i s_{i+1} s_i", r, i), si * s1 * si, s1 * si * s1));
      out.push_back(check_morphisms(idx("s_i e_{i+1} e_i = s_{i+1} e_i", r, i), si * e1 * ei, s1 * ei));
      out.push_back(check_morphisms(idx("e_i s_{i+1} e_i = e_i", r, i), ei * s1 * ei, ei));
    }
    if (i > 1) {
      const PM sm = z.s(r, i - 1);
      out.push_back(check_morphisms(idx("e_i s_{i-1} e_i = e_i", r, i), ei * sm * ei, ei));
    }
    out.push_back(check_morphisms(idx("ast s_i = s_{r-i}", r, i), ast(si), z.s(r, r - i)));
    out.push_back(check_morphisms(idx("ast e_i = e_{r-i}", r, i), ast(ei), z.e(r, r - i)));
  }

  // The permutation diagrams multiply as the symmetric group.
  if (r <= 4) {
    const auto perms = permutations(r);
    bool hom = true;
    for (const auto& a : perms) {
      for (const auto& b : perms) {
        std::vector<int> ab(a.size());
        for (std::size_t t = 0; t < a.size(); ++t) ab[t] = a[b[t]];
        const auto c = compose(permutation_diagram(a), permutation_diagram(b));
        if (c.loops != 0 || !(c.diagram == permutation_diagram(ab))) hom = false;
      }
    }
    out.push_back(check_true("permutation diagrams multiply as Sym_" + std::to_string(r), hom));
  }

  // ast reverses products of generators.
  std::vector<PM> gens;
  for (int i = 1; i < r; ++i) {
    gens.push_back(z.s(r, i));
    gens.push_back(z.e(r, i));
  }
  bool anti = true;
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      if (!(ast(x * y) == ast(y) * ast(x)) || !(ast(ast(x)) == x)) anti = false;
    }
  }
  out.push_back(check_true("ast is an anti-involution of B_" + std::to_string(r), anti));
  return out;
}

Report verify_sigma_identities(int r, int eps) {
  Report out;
  const Symbolic z;
  const std::string tag = " r=" + std::to_string(r) + " eps=" + std::to_string(eps);
  const PM sr = sigma(z.ring, z.delta, eps, r);

  if (r >= 2) {
    const PM prev = tensor(sigma(z.ring, z.delta, eps, r - 1), z.id(1));
    mpq_class c(mpz_class(-eps), factorial(r - 2));
    c.canonicalize();
    const PM rhs = prev + (prev * z.s(r, r - 1) * prev).scaled(Poly(c));
    out.push_back(check_morphisms("sigma recursion" + tag, sr, rhs));
  }

  if (r >= 1) {
    const PM cap_top = tensor(z.id(r - 1), z.unit(cap()));
    const PM cup_bottom = tensor(z.id(r - 1), z.unit(cup()));
    const PM lhs = cap_top * tensor(sr, z.id(1)) * cup_bottom;
    // -eps (r - 1 - eps d)
    const Poly coeff = Poly(mpq_class(-eps * (r - 1))) + Poly::monomial(1, 1);
    out.push_back(check_morphisms("sigma capped trace" + tag, lhs,
                                  sigma(z.ring, z.delta, eps, r - 1).scaled(coeff)));

    const PM capped = cap_top * tensor(sr, z.id(1));
    PM rhs(z.ring, z.delta, r + 1, r - 1);
    const PM prev = sigma(z.ring, z.delta, eps, r - 1);
    for (int i = 0; i < r; ++i) {
      // Bottom arc {r-1-i, r}; the remaining bottom nodes run straight up.
      std::vector<Diagram::Pair> pairs{{r - 1 - i, r}};
      int top = 0;
      for (int b = 0; b < r; ++b) {
        if (b == r - 1 - i) continue;
        pairs.emplace_back(b, r + 1 + top++);
      }
      const PM ci = z.unit(Diagram(r + 1, r - 1, pairs));
      const int sign = (i % 2 == 1 && eps == 1) ? -1 : 1;
      rhs += (prev * ci).scaled(Poly(mpq_class(sign)));
    }
    out.push_back(check_morphisms("sigma cap expansion" + tag, capped, rhs));
  }
  return out;
}

Report verify_sigma_cap(int r, int k) {
  Report out;
  const Symbolic z;
  const std::string tag = " r=" + std::to_string(r) + " k=" + std::to_string(k);
  if (r < 2 || k < 0 || 2 * k > r) throw RangeError("verify_sigma_cap: need r >= 2, 0 <= 2k <= r");
  const PM sr = sigma(z.ring, z.delta, -1, r);
  const PM cups = tensor(z.id(r - 2 * k), z.unit(tensor_power(cup(), k)));
  const PM lhs = tensor(z.id(r - 2), z.unit(cap())) * sr * cups;

  const PM s2 = sigma(z.ring, z.delta, -1, r - 2);
  PM rhs(z.ring, z.delta, r - 2 * k, r - 2);
  if (k >= 1) {
    // 4k (r + d/2 - k - 1)
    const Poly coeff = Poly(mpq_class(4 * k * (r - k - 1))) + Poly::monomial(2 * k, 1);
    rhs += (s2 * tensor(z.id(r - 2 * k), z.unit(tensor_power(cup(), k - 1)))).scaled(coeff);
  }
  const int straight = r - 2 - 2 * k;
  if (straight >= 0) {
    // Straight strands, then k cups on the top and one cap on the bottom.
    const Diagram m = tensor(identity(straight), tensor(tensor_power(cup(), k), cap()));
    mpq_class c(mpz_class(1), factorial(straight));
    c.canonicalize();
    rhs += (s2 * z.unit(m) * sigma(z.ring, z.delta, -1, r - 2 * k)).scaled(Poly(c));
  }
  out.push_back(check_morphisms("sigma cap" + tag, lhs, rhs));
  return out;
}

Report verify_afu(int m, int i, int k) {
  Report out;
  const std::string tag = " m=" + std::to_string(m) + " i=" + std::to_string(i) + " k=" + std::to_string(k);
  if (i < 1 || i > m || k < 0 || k > i || k > m + 1 - i) {
    throw RangeError("verify_afu: need 1 <= i <= m and 0 <= k <= min(i, m+1-i)");
  }
  using QM = Morphism<RationalField>;
  const RationalField qq;
  const mpq_class delta = m;
  auto unit = [&](const Diagram& d) { return QM::from_diagram(qq, delta, d); };

  const QM fi = f_p(qq, delta, m, i);
  const QM cap_i = unit(tensor(tensor(identity(i - 1), cap()), identity(m - i)));
  const QM cups = unit(tensor(tensor(identity(i - k), u_nest(k)), identity(m + 1 - i - k)));
  const QM lhs = cap_i * fi * cups;

  // F' = A(1, i-1) A(i, m-1) in B_{m-1}.
  const QM f_prime = compose(antisymmetrizer_block(qq, delta, 1, i - 1, m - 1),
                             antisymmetrizer_block(qq, delta, i, m - 1, m - 1));
  QM rhs(qq, delta, m + 1 - 2 * k, m - 1);
  if (k >= 1) {
    const QM fewer = unit(tensor(tensor(identity(i - k), u_nest(k - 1)), identity(m + 1 - i - k)));
    rhs += (f_prime * fewer).scaled(mpq_class(k * k));
  }
  const int s1 = i - 1 - k;
  const int s2 = m - i - k;
  if (s1 >= 0 && s2 >= 0) {
    mpq_class zeta(mpz_class(1), factorial(s1) * factorial(s2));
    zeta.canonicalize();
    const int w = m + 1 - 2 * k;
    const QM f_second = compose(antisymmetrizer_block(qq, delta, 1, i - k, w),
                                antisymmetrizer_block(qq, delta, i - k + 1, w, w));
    const Diagram middle = tensor(tensor(identity(s1), tensor(u_nest(k), cap())), identity(s2));
    rhs += (f_prime * unit(middle) * f_second).scaled(zeta);
  }
  out.push_back(check_morphisms("cap F_i nested cups" + tag, lhs, rhs));
  return out;
}

}  // namespace brauer
