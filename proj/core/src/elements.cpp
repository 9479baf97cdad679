#include "brauer/elements.hpp"

namespace brauer {

int inversions(std::span<const int> perm) {
  int count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++count;
    }
  }
  return count;
}

std::vector<std::vector<int>> permutations(int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(std::max(r, 0)));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Diagram wire_box(const Diagram& inner, const BoxWiring& w) {
  const int n = w.box;
  if (inner.lower_count() != n || inner.upper_count() != n) {
    throw ValencyError("wire_box: inner diagram does not fit the box");
  }
  const int outer = w.outer_lower + w.outer_upper;
  std::vector<int> outer_leg(static_cast<std::size_t>(outer), -1);
  for (int leg = 0; leg < 2 * n; ++leg) {
    const int t = w.target[leg];
    if (t >= 0) outer_leg[t] = leg;
  }
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  std::vector<int> partner(static_cast<std::size_t>(outer), -1);
  for (int o = 0; o < outer; ++o) {
    if (partner[o] != -1) continue;
    int leg = outer_leg[o];
    if (leg < 0) throw ValidationError("wire_box: outer node without a leg");
    while (true) {
      seen[leg] = 1;
      const int across = inner.partner(leg);
      seen[across] = 1;
      const int t = w.target[across];
      if (t >= 0) {
        partner[o] = t;
        partner[t] = o;
        break;
      }
      leg = -1 - t;
    }
  }
  for (char s : seen) {
    if (!s) throw ValidationError("wire_box: wiring closes a loop");
  }
  return Diagram::from_partners(w.outer_lower, w.outer_upper, std::move(partner));
}

BoxWiring d_pq_wiring(int n, int p, int q) {
  if (n < 1 || q < 0 || p < q || p > n) {
    throw RangeError("D(p,q): need n >= 1 and 0 <= q <= p <= n");
  }
  const int box = 2 * n + 1;
  const int k = box - p + q;
  BoxWiring w{box, k, k, std::vector<int>(static_cast<std::size_t>(2 * box), 0)};
  auto outer_top = [&](int pos) { return k + pos; };
  const int straight = box - 2 * (p - q) - q;

  for (int b = 0; b < box; ++b) {
    if (b < box - p) {
      w.target[b] = b;
    } else {
      const int j = b - (box - p);
      w.target[b] = outer_top(straight + p - 1 - j);
    }
  }
  const int arcs_end = straight + 2 * (p - q);
  for (int t = 0; t < box; ++t) {
    int& target = w.target[box + t];
    if (t < straight) {
      target = outer_top(t);
    } else if (t < arcs_end) {
      target = -1 - (box + (straight + arcs_end - 1 - t));
    } else {
      const int j = t - arcs_end;
      target = k - 1 - j;
    }
  }
  return w;
}

Morphism<RationalField> xi(int n, int k) {
  const RationalField qq;
  const mpq_class delta = -2 * n;
  const int r = n + 1;
  if (k < 0 || 2 * k > r) throw RangeError("Xi_k: need 0 <= 2k <= n+1");
  const auto s = sigma(qq, delta, -1, r);
  Morphism<RationalField> e = identity_morphism(qq, delta, r);
  for (int j = 1; j <= k; ++j) e = compose(e, Morphism<RationalField>::from_diagram(qq, delta, e_i(r, n + 2 - 2 * j)));
  return compose(compose(s, e), s);
}

Morphism<RationalField> phi(int n) {
  if (n < 1) throw RangeError("Phi: need n >= 1");
  const RationalField qq;
  const mpq_class delta = -2 * n;
  Morphism<RationalField> out(qq, delta, n + 1, n + 1);
  for (int k = 0; 2 * k <= n + 1; ++k) {
    const mpz_class base = mpz_class(1) << k;
    const mpz_class twok = base * factorial(k);
    mpq_class a(mpz_class(1), mpz_class(twok * twok * factorial(n + 1 - 2 * k)));
    a.canonicalize();
    out += xi(n, k).scaled(a);
  }
  return out;
}

Morphism<RationalField> e_p_formula(int m, int i) {
  if (m < 1 || i < 0 || i > m + 1) throw RangeError("E_i: need m >= 1 and 0 <= i <= m+1");
  const RationalField qq;
  const mpq_class delta = m;
  const int r = m + 1;
  const auto f = f_p(qq, delta, m, i);
  Morphism<RationalField> out(qq, delta, r, r);
  for (int j = 0; j <= std::min(i, m + 1 - i); ++j) {
    const mpz_class fj = factorial(j);
    mpq_class c(mpz_class(1), mpz_class(factorial(i - j) * factorial(m + 1 - i - j) * fj * fj));
    c.canonicalize();
    if (j % 2 == 1) c = -c;
    const auto term = compose(compose(f, e_i_j(qq, delta, i, j, r)), f);
    out += term.scaled(c);
  }
  return out;
}

}  // namespace brauer
