#include "brauer/suites.hpp"

#include <random>

#include "brauer/elements.hpp"
#include "brauer/identities.hpp"
#include "brauer/word.hpp"

namespace brauer {

namespace {

using QM = Morphism<RationalField>;

std::string str(long long v) { return std::to_string(v); }

CheckRecord check_count(std::string name, long long expected, long long computed) {
  return check_equal(std::move(name), str(expected), str(computed));
}

QM lift(const QM& x, const RationalField&) { return x; }
Morphism<PrimeField> lift(const QM& x, const PrimeField& f) { return reduce_mod_p(x, f.modulus()); }

Functor<RationalField> rational_functor(Family family, int m) {
  return Functor<RationalField>(group_spec(family, m), RationalField{});
}

// ---- relations ----------------------------------------------------------

Word random_word(std::mt19937& rng, int max_width, int max_layers) {
  Word w;
  w.domain = std::uniform_int_distribution<int>(0, 4)(rng);
  const int layers = std::uniform_int_distribution<int>(0, max_layers)(rng);
  int width = w.domain;
  for (int i = 0; i < layers; ++i) {
    std::vector<Generator> options;
    if (width >= 2) options.push_back(Generator::X);
    if (width >= 2) options.push_back(Generator::A);
    if (width + 2 <= max_width) options.push_back(Generator::U);
    if (options.empty()) break;
    Layer layer;
    layer.generator = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    const int free = width - (layer.generator == Generator::U ? 0 : 2);
    layer.left = std::uniform_int_distribution<int>(0, free)(rng);
    layer.right = free - layer.left;
    width = layer.output_width();
    w.layers.push_back(layer);
  }
  return w;
}

}  // namespace

Report relations_suite(const SuiteOptions&) {
  Report out;
  for (const auto& c : verify_relation_soundness()) {
    std::string detail = "d^" + str(c.lhs.delta_power) + " " + c.lhs.diagram.to_string() + " vs d^" +
                         str(c.rhs.delta_power) + " " + c.rhs.diagram.to_string();
    out.push_back(check_true("relation " + rule_name(c.rule) + " " + transform_name(c.transform), c.pass, detail));
  }

  // Diagram-level forms of the basic relations.
  const Diagram x = crossing(), a = cap(), u = cup(), i1 = identity(1), i2 = identity(2);
  out.push_back(check_true("X X = I2", compose(x, x) == Composite{0, i2}));
  out.push_back(check_true("A X = A", compose(a, x) == Composite{0, a}));
  out.push_back(check_true("X U = U", compose(x, u) == Composite{0, u}));
  out.push_back(check_true("A U = d", compose(a, u) == Composite{1, Diagram()}));
  out.push_back(check_true("snake (A x I)(I x U) = I",
                           compose(tensor(a, i1), tensor(i1, u)) == Composite{0, i1}));
  out.push_back(check_true("snake (I x A)(U x I) = I",
                           compose(tensor(i1, a), tensor(u, i1)) == Composite{0, i1}));
  out.push_back(check_true("slide (X x I)(I x U) = (I x X)(U x I)",
                           compose(tensor(x, i1), tensor(i1, u)) == compose(tensor(i1, x), tensor(u, i1))));

  // Random rewriting keeps the value of a word.
  std::mt19937 rng(20240611);
  int walks = 0, sound = 0;
  for (int t = 0; t < 300; ++t) {
    ScaledWord w{0, random_word(rng, 6, 6)};
    const ScaledDiagram value = evaluate_word(w);
    bool ok = true;
    for (int step = 0; step < 8; ++step) {
      const auto inst = applicable_instances(w);
      if (inst.empty()) break;
      w = apply_relation(w, inst[std::uniform_int_distribution<std::size_t>(0, inst.size() - 1)(rng)]);
      if (!(evaluate_word(w) == value)) ok = false;
    }
    ++walks;
    if (ok) ++sound;
  }
  out.push_back(check_count("random rewrite walks preserve the value", walks, sound));
  return out;
}

Report roundtrip_suite(const SuiteOptions&) {
  Report out;
  for (int total = 0; total <= 8; total += 2) {
    for (int k = 0; k <= total; ++k) {
      const int l = total - k;
      const auto diagrams = enumerate_diagrams(k, l);
      long long ok = 0;
      for (const Diagram& d : diagrams) {
        const Word w = synthesize_word(d);
        const bool text_ok = parse_word(format_word(w), w.domain) == w;
        if (text_ok && evaluate_word(w) == ScaledDiagram{0, d}) ++ok;
      }
      out.push_back(check_count("evaluate(synthesize(D)) = D for all (" + str(k) + "," + str(l) + ")",
                                static_cast<long long>(diagrams.size()), ok));
    }
  }
  return out;
}

Report presentation_suite(const SuiteOptions&) {
  Report out;
  for (int r = 2; r <= 5; ++r) append(out, verify_brauer_presentation(r));
  return out;
}

Report sigma_suite(const SuiteOptions&) {
  Report out;
  for (int r = 1; r <= 6; ++r) {
    append(out, verify_sigma_identities(r, 1));
    append(out, verify_sigma_identities(r, -1));
  }
  for (int r = 2; r <= 6; ++r) {
    for (int k = 0; k <= 2 && 2 * k <= r; ++k) append(out, verify_sigma_cap(r, k));
  }
  for (int m = 1; m <= 4; ++m) {
    for (int i = 1; i <= m; ++i) {
      for (int k = 0; k <= std::min(i, m + 1 - i); ++k) append(out, verify_afu(m, i, k));
    }
  }
  return out;
}

Report phi_suite(const SuiteOptions&) {
  Report out;
  const RationalField qq;
  {
    const QM p = phi(1);
    QM expected = identity_morphism(qq, p.delta(), 2);
    expected += QM::from_diagram(qq, p.delta(), s_i(2, 1));
    expected += QM::from_diagram(qq, p.delta(), e_i(2, 1));
    out.push_back(check_morphisms("Phi(1) = 1 + s_1 + e_1", p, expected));
  }
  for (int n = 1; n <= 3; ++n) {
    const std::string tag = " n=" + str(n);
    const QM p = phi(n);
    const int r = n + 1;
    out.push_back(check_true("Phi integral" + tag, integrality_check(p)));
    out.push_back(check_morphisms("Phi^2 = (n+1)! Phi" + tag, p * p, p.scaled(mpq_class(factorial(r)))));
    bool annihilated = true;
    for (int i = 1; i < r; ++i) {
      const QM e = QM::from_diagram(qq, p.delta(), e_i(r, i));
      if (!(e * p).is_zero() || !(p * e).is_zero()) annihilated = false;
    }
    out.push_back(check_true("e_i Phi = Phi e_i = 0" + tag, annihilated));
    out.push_back(check_morphisms("ast Phi = Phi" + tag, ast(p), p));
    bool invariant = true;
    for (const auto& perm : permutations(r)) {
      const QM pi = from_permutation(qq, p.delta(), perm);
      if (!(pi * p == p) || !(p * pi == p)) invariant = false;
    }
    out.push_back(check_true("pi Phi = Phi pi = Phi for all pi" + tag, invariant));
    out.push_back(check_equal("Jones trace of Phi" + tag, "0", qq.format(jones_trace_symbolic(p, -1))));
  }
  for (int n = 1; n <= 2; ++n) {
    const auto fn = rational_functor(Family::Symplectic, 2 * n);
    out.push_back(check_true("F(Phi(" + str(n) + ")) = 0 for " + fn.spec().name(), fn.matrix(phi(n)).is_zero()));
  }
  for (int n = 1; n <= 8; ++n) {
    mpz_class total = 0;
    for (int k = 0; k <= n; ++k) {
      const mpz_class term = binomial(n, k) * binomial(2 * n - 2 * k, n - 1);
      total += (k % 2 == 0) ? term : mpz_class(-term);
    }
    out.push_back(check_equal("sum_k (-1)^k C(n,k) C(2n-2k,n-1) = 0 n=" + str(n), "0", total.get_str()));
  }
  return out;
}

Report ep_suite(const SuiteOptions& opt) {
  Report out;
  const RationalField qq;
  const int top = opt.extended ? 5 : 4;
  for (int m = 2; m <= top; ++m) {
    const mpq_class delta = m;
    const int r = m + 1;
    std::vector<QM> e;
    for (int p = 0; p <= r; ++p) e.push_back(e_p_rotation(qq, delta, m, p));
    for (int p = 0; p <= r; ++p) {
      const std::string tag = " m=" + str(m) + " p=" + str(p);
      const QM& ep = e[p];
      const QM& eq = e[r - p];
      out.push_back(check_morphisms("rotation construction = closed formula" + tag, ep, e_p_formula(m, p)));
      out.push_back(check_true("E_p integral" + tag, integrality_check(ep)));
      const QM f = f_p(qq, delta, m, p);
      const QM scaled = ep.scaled(mpq_class(factorial(p) * factorial(r - p)));
      out.push_back(check_morphisms("F_p E_p = p!(m+1-p)! E_p" + tag, f * ep, scaled));
      out.push_back(check_morphisms("E_p F_p = p!(m+1-p)! E_p" + tag, ep * f, scaled));
      bool annihilated = true;
      for (int i = 1; i <= m; ++i) {
        const QM ei = QM::from_diagram(qq, delta, e_i(r, i));
        if (!(ei * ep).is_zero() || !(ep * ei).is_zero()) annihilated = false;
      }
      out.push_back(check_true("e_i E_p = E_p e_i = 0" + tag, annihilated));
      out.push_back(check_morphisms("ast E_p = E_{m+1-p}" + tag, ast(ep), eq));
      const QM x1 = QM::from_diagram(qq, delta, x_block(p, r - p));
      const QM x2 = QM::from_diagram(qq, delta, x_block(r - p, p));
      out.push_back(check_morphisms("X E_p X = E_{m+1-p}" + tag, x1 * ep * x2, eq));
    }
    const QM s = sigma(qq, delta, 1, r);
    out.push_back(check_morphisms("E_0 = Sigma_+(m+1) m=" + str(m), e[0], s));
    out.push_back(check_morphisms("E_{m+1} = Sigma_+(m+1) m=" + str(m), e[r], s));

    if (m <= (opt.extended ? 4 : 3)) {
      bool annihilated = true;
      for (const Diagram& d : enumerate_diagrams(r, r)) {
        if (d.through_count() == r) continue;
        const QM dm = QM::from_diagram(qq, delta, d);
        for (const QM& ep : e) {
          if (!(dm * ep).is_zero() || !(ep * dm).is_zero()) annihilated = false;
        }
      }
      out.push_back(check_true("D E_p = E_p D = 0 when D has fewer than m+1 through strings m=" + str(m),
                               annihilated));
    }
    if (m <= 3) {
      const auto fn = rational_functor(Family::Orthogonal, m);
      bool zero = true;
      for (const QM& ep : e) zero = zero && fn.matrix(ep).is_zero();
      out.push_back(check_true("F(E_p) = 0 for all p, " + fn.spec().name(), zero));
    }
  }
  return out;
}

namespace {

// The kernel statements for one group over one field. `gen` generates the
// kernel as an ideal in the first non-injective degree.
template <class F>
Report kernel_records(const Functor<F>& fn, const QM& gen, int max_r, int jobs) {
  Report out;
  const std::string name = fn.spec().name() + " over " + fn.field().name();
  const int d = fn.spec().d();
  const auto g = lift(gen, fn.field());
  for (int r = 1; r <= max_r; ++r) {
    const std::string tag = " " + name + " r=" + str(r);
    const long long total = diagram_count(r, r);
    const auto ker = static_cast<long long>(kernel_dimension(fn, r, r, jobs));
    if (2 * r <= 2 * d) {
      out.push_back(check_count("injective: hom_rank = (2r-1)!!" + tag, total, total - ker));
    }
    if (r >= g.lower_count()) {
      out.push_back(check_count("kernel = ideal span" + tag, static_cast<long long>(ideal_span_dimension(r, g)), ker));
    }
  }
  return out;
}

template <class F>
Report slice_records(const Functor<F>& fn) {
  Report out;
  const std::string name = fn.spec().name() + " over " + fn.field().name();
  const int d = fn.spec().d();
  for (auto [k, l] : {std::pair{4, 0}, std::pair{3, 1}, std::pair{2, 2}}) {
    const std::string tag = " " + name + " (" + str(k) + "," + str(l) + ")";
    const auto ker = static_cast<long long>(kernel_dimension(fn, k, l));
    const auto slice = static_cast<long long>(tensor_ideal_span_dimension(fn, k, l));
    out.push_back(check_count("tensor ideal slice = kernel" + tag, ker, slice));
    if (k + l <= 2 * d) out.push_back(check_count("tensor ideal slice vanishes" + tag, 0, slice));
  }
  return out;
}

template <class F>
long long kernel_count(const Functor<F>& fn, int r, int jobs) {
  return static_cast<long long>(kernel_dimension(fn, r, r, jobs));
}

}  // namespace

Report kernel_suite(const SuiteOptions& opt) {
  Report out;
  const RationalField qq;
  const auto sp2 = rational_functor(Family::Symplectic, 2);
  const auto sp4 = rational_functor(Family::Symplectic, 4);
  const auto o2 = rational_functor(Family::Orthogonal, 2);
  const auto o3 = rational_functor(Family::Orthogonal, 3);

  append(out, kernel_records(sp2, phi(1), 4, opt.jobs));
  out.push_back(check_count("kernel_dimension(2,2) Sp(2)", 1, kernel_count(sp2, 2, opt.jobs)));
  out.push_back(check_count("kernel_dimension(3,3) Sp(2) = 15 - hom_rank",
                            15 - static_cast<long long>(hom_rank(sp2, 3, 3, opt.jobs)), kernel_count(sp2, 3, opt.jobs)));

  // Sp(4) is injective up to r = n = 2; at r = 3 the kernel is spanned by Phi(2).
  append(out, kernel_records(sp4, phi(2), 4, opt.jobs));
  out.push_back(check_count("kernel_dimension(3,3) Sp(4) = 15 - commutant dimension",
                            15 - static_cast<long long>(commutant_dimension(3, sp4.spec(), qq)),
                            kernel_count(sp4, 3, opt.jobs)));

  append(out, kernel_records(o2, e_p_rotation(qq, mpq_class(2), 2, 1), 4, opt.jobs));
  append(out, kernel_records(o3, e_p_rotation(qq, mpq_class(3), 3, 2), 4, opt.jobs));

  append(out, slice_records(sp2));
  append(out, slice_records(o2));
  append(out, slice_records(o3));
  return out;
}

Report fullness_suite(const SuiteOptions& opt) {
  Report out;
  const RationalField qq;
  std::vector<GroupSpec> specs;
  for (int m = 1; m <= 3; ++m) specs.push_back(group_spec(Family::Orthogonal, m));
  specs.push_back(group_spec(Family::Symplectic, 2));
  for (const auto& spec : specs) {
    const Functor<RationalField> fn(spec, qq);
    for (int r = 1; r <= 3; ++r) {
      out.push_back(check_count("hom_rank = commutant dimension " + spec.name() + " r=" + str(r),
                                static_cast<long long>(commutant_dimension(r, spec, qq)),
                                static_cast<long long>(hom_rank(fn, r, r, opt.jobs))));
    }
  }
  return out;
}

Report trace_suite(const SuiteOptions&) {
  Report out;
  const RationalField qq;
  for (const auto& fn : {rational_functor(Family::Orthogonal, 2), rational_functor(Family::Orthogonal, 3),
                         rational_functor(Family::Symplectic, 2)}) {
    for (int r = 1; r <= 4; ++r) {
      const auto diagrams = enumerate_diagrams(r, r);
      long long ok = 0, symbolic_ok = 0;
      for (const Diagram& d : diagrams) {
        if (trace_check(fn, d)) ++ok;
        const auto tr = fn.matrix(d).trace();
        if (qq.equal(tr, jones_trace_symbolic(fn.unit(d), fn.eps()))) ++symbolic_ok;
      }
      const std::string tag = " " + fn.spec().name() + " r=" + str(r);
      out.push_back(check_count("Tr F(D) = eps^r (eps m)^loops" + tag, static_cast<long long>(diagrams.size()), ok));
      out.push_back(check_count("Tr F(D) = symbolic Jones trace" + tag, static_cast<long long>(diagrams.size()),
                                symbolic_ok));
    }
  }
  return out;
}

Report charp_suite(const SuiteOptions& opt) {
  Report out;
  const RationalField qq;
  const Functor<PrimeField> sp2p(group_spec(Family::Symplectic, 2), PrimeField(5));
  const Functor<PrimeField> o3p(group_spec(Family::Orthogonal, 3), PrimeField(7));
  const auto sp2 = rational_functor(Family::Symplectic, 2);
  const auto o3 = rational_functor(Family::Orthogonal, 3);

  out.push_back(check_true("F(Phi(1)) = 0 for Sp(2) over GF(5)", sp2p.matrix(reduce_mod_p(phi(1), 5)).is_zero()));
  bool zero = true;
  for (int p = 0; p <= 4; ++p) {
    zero = zero && o3p.matrix(reduce_mod_p(e_p_rotation(qq, mpq_class(3), 3, p), 7)).is_zero();
  }
  out.push_back(check_true("F(E_p) = 0 for all p, O(3) over GF(7)", zero));

  append(out, kernel_records(sp2p, phi(1), 4, opt.jobs));
  append(out, kernel_records(o3p, e_p_rotation(qq, mpq_class(3), 3, 2), 4, opt.jobs));
  append(out, slice_records(sp2p));
  append(out, slice_records(o3p));
  for (int r = 1; r <= 4; ++r) {
    out.push_back(check_count("kernel dimension matches characteristic 0, Sp(2) r=" + str(r),
                              kernel_count(sp2, r, opt.jobs), kernel_count(sp2p, r, opt.jobs)));
    out.push_back(check_count("kernel dimension matches characteristic 0, O(3) r=" + str(r),
                              kernel_count(o3, r, opt.jobs), kernel_count(o3p, r, opt.jobs)));
  }
  return out;
}

namespace {

QM random_morphism(std::mt19937& rng, const RationalField& qq, const mpq_class& delta, int k, int l) {
  const auto diagrams = enumerate_diagrams(k, l);
  QM x(qq, delta, k, l);
  const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int t = 0; t < terms; ++t) {
    const auto& d = diagrams[std::uniform_int_distribution<std::size_t>(0, diagrams.size() - 1)(rng)];
    mpq_class c(std::uniform_int_distribution<int>(-5, 5)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
    c.canonicalize();
    x.add_term(d, c);
  }
  return x;
}

// Uniform in [0, top] with the given parity.
int random_valency(std::mt19937& rng, int parity, int top) {
  int v = std::uniform_int_distribution<int>(0, top)(rng);
  if (v % 2 != parity) v = v == 0 ? 1 : v - 1;
  return v;
}

}  // namespace

Report functor_suite(const SuiteOptions&) {
  Report out;
  const RationalField qq;
  std::mt19937 rng(7041);
  for (const auto& fn : {rational_functor(Family::Orthogonal, 2), rational_functor(Family::Orthogonal, 3),
                         rational_functor(Family::Symplectic, 2)}) {
    const std::string tag = " " + fn.spec().name();
    long long total = 0, ok = 0;
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (n % 2 != 0) continue;
        for (const Diagram& d : enumerate_diagrams(k, n - k)) {
          ++total;
          if (fn.image_direct(d) == fn.image_layered(d)) ++ok;
        }
      }
    }
    out.push_back(check_count("layered = direct on all diagrams with k+l <= 6" + tag, total, ok));

    const QM proto = fn.unit(identity(0));
    int composed = 0, tensored = 0;
    const int pairs = 200;
    for (int t = 0; t < pairs; ++t) {
      const int a = std::uniform_int_distribution<int>(0, 3)(rng);
      const int b = random_valency(rng, a % 2, 3);
      const int c = random_valency(rng, b % 2, 3);
      const QM x = random_morphism(rng, qq, proto.delta(), a, b);
      const QM y = random_morphism(rng, qq, proto.delta(), b, c);
      if (fn.matrix(y * x) == fn.matrix(y) * fn.matrix(x)) ++composed;

      const int a2 = std::uniform_int_distribution<int>(0, 2)(rng);
      const int a3 = std::uniform_int_distribution<int>(0, 2)(rng);
      const QM z = random_morphism(rng, qq, proto.delta(), a2, random_valency(rng, a2 % 2, 2));
      const QM w = random_morphism(rng, qq, proto.delta(), a3, random_valency(rng, a3 % 2, 2));
      if (fn.matrix(tensor(z, w)) == kron(fn.matrix(z), fn.matrix(w))) ++tensored;
    }
    out.push_back(check_count("F(y o x) = F(y) F(x) on random pairs" + tag, pairs, composed));
    out.push_back(check_count("F(x (x) y) = F(x) (x) F(y) on random pairs" + tag, pairs, tensored));
    append(out, verify_pau(fn));
  }
  return out;
}

Report pau_suite(const GroupSpec& spec) { return verify_pau(Functor<RationalField>(spec, RationalField{})); }

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"relations", "relation soundness", relations_suite},
      {"roundtrip", "word round-trip", roundtrip_suite},
      {"presentation", "Brauer algebra presentation", presentation_suite},
      {"sigma", "Sigma identities", sigma_suite},
      {"phi", "Phi suite", phi_suite},
      {"ep", "E_p suite", ep_suite},
      {"kernel", "kernel theorems", kernel_suite},
      {"fullness", "fullness", fullness_suite},
      {"trace", "Jones trace", trace_suite},
      {"charp", "positive characteristic", charp_suite},
      {"functor", "functor consistency", functor_suite},
  };
  return all;
}

const Suite& find_suite(const std::string& name) {
  for (const auto& s : suites()) {
    if (s.name == name) return s;
  }
  throw ValidationError("unknown suite '" + name + "'");
}

}  // namespace brauer
