#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/elements.hpp"
#include "brauer/matrix.hpp"
#include "brauer/morphism.hpp"
#include "brauer/report.hpp"
#include "brauer/rings.hpp"
#include "brauer/word.hpp"

namespace brauer {

enum class Family { Orthogonal, Symplectic };

// The group preserving a nondegenerate form on V = K^m.
struct GroupSpec {
  Family family = Family::Orthogonal;
  int m = 0;
  int epsilon = 1;
  // gram(i, j) = (b_i, b_j).
  ExactMatrix<RationalField> gram{RationalField{}, 0, 0};
  // Row i expresses the dual basis vector of b_i in the basis b_j.
  ExactMatrix<RationalField> dual_change{RationalField{}, 0, 0};

  // "O(m)" or "Sp(m)".
  std::string name() const;
  // m for the orthogonal group, m/2 for the symplectic group.
  int d() const { return family == Family::Orthogonal ? m : m / 2; }
};

// Orthogonal: identity Gram matrix. Symplectic (m even): [[0, I], [-I, 0]].
GroupSpec group_spec(Family family, int m);
Family parse_family(const std::string& text);

// Upper bound on m^(k+l) for functor computations; BRAUER_MAX_CELLS
// overrides the default of 10^7.
std::uint64_t max_cells();
void check_cells(int m, int nodes);

// Runs body(i) for i in [0, n) on up to `jobs` threads. Each index is
// handled exactly once; callers write into preallocated slots.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

enum class FunctorMethod { Direct, Layered };

template <class F>
struct Generators {
  ExactMatrix<F> id, x, a, u;
};

// The functor F from the Brauer category with delta = eps*m to tensor
// powers of V, over the field F (rationals or a prime field). Images are
// m^l x m^k matrices; multi-indices list the leftmost tensor factor as the
// most significant digit.
template <class F>
class Functor {
 public:
  using Elem = typename F::Elem;
  using Vec = SparseVec<F>;

  Functor(GroupSpec spec, F field) : spec_(std::move(spec)), field_(std::move(field)) {
    const int m = spec_.m;
    gram_.assign(static_cast<std::size_t>(m * m), field_.zero());
    coev_.assign(static_cast<std::size_t>(m * m), field_.zero());
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        gram_[i * m + j] = field_.from_rational(spec_.gram.at(i, j));
        coev_[i * m + j] = field_.from_rational(spec_.dual_change.at(i, j));
      }
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (!field_.is_zero(gram_[i * m + j])) gram_nz_.push_back({i, j, gram_[i * m + j]});
        if (!field_.is_zero(coev_[i * m + j])) coev_nz_.push_back({i, j, coev_[i * m + j]});
      }
    }
  }

  const GroupSpec& spec() const { return spec_; }
  const F& field() const { return field_; }
  int m() const { return spec_.m; }
  int eps() const { return spec_.epsilon; }
  Elem delta() const { return field_.from_int(spec_.epsilon * spec_.m); }

  std::int64_t dim(int t) const {
    std::int64_t d = 1;
    for (int i = 0; i < t; ++i) d *= spec_.m;
    return d;
  }

  Generators<F> generators() const {
    return {matrix(identity(1)), matrix(crossing()), matrix(cap()), matrix(cup())};
  }

  // Contraction formula: through arcs carry equal indices, bottom arcs the
  // form, top arcs the coevaluation; overall sign eps^{crossing_count}.
  Vec image_direct(const Diagram& d) const {
    check_cells(spec_.m, d.node_count());
    const int k = d.lower_count();
    std::vector<Diagram::Pair> arcs = d.pairs();
    std::vector<int> digit(static_cast<std::size_t>(d.node_count()), 0);
    std::vector<std::pair<std::int64_t, Elem>> out;
    const bool negate = spec_.epsilon == -1 && crossing_count(d) % 2 == 1;
    const Elem start = negate ? field_.neg(field_.one()) : field_.one();

    std::function<void(std::size_t, const Elem&)> rec = [&](std::size_t t, const Elem& w) {
      if (t == arcs.size()) {
        out.emplace_back(flat_index(d, digit), w);
        return;
      }
      const auto [a, b] = arcs[t];
      if (a < k && b >= k) {
        for (int i = 0; i < spec_.m; ++i) {
          digit[a] = digit[b] = i;
          rec(t + 1, w);
        }
        return;
      }
      const auto& table = (b < k) ? gram_nz_ : coev_nz_;
      for (const Option& o : table) {
        digit[a] = o.i;
        digit[b] = o.j;
        rec(t + 1, field_.mul(w, o.w));
      }
    };
    rec(0, start);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }

  // Reference path: evaluates the layers of synthesize_word(d).
  Vec image_layered(const Diagram& d) const {
    check_cells(spec_.m, d.node_count());
    const Word w = synthesize_word(d);
    const std::int64_t in_dim = dim(d.lower_count());
    std::map<std::int64_t, Elem> acc;
    for (std::int64_t in = 0; in < in_dim; ++in) {
      std::map<std::int64_t, Elem> state{{in, field_.one()}};
      for (const Layer& layer : w.layers) state = apply_layer(layer, state);
      for (const auto& [out, v] : state) acc[out * in_dim + in] = v;
    }
    return sparse_from_map(field_, acc);
  }

  Vec image(const Diagram& d, FunctorMethod method = FunctorMethod::Direct) const {
    return method == FunctorMethod::Direct ? image_direct(d) : image_layered(d);
  }

  ExactMatrix<F> matrix(const Diagram& d, FunctorMethod method = FunctorMethod::Direct) const {
    return to_matrix(image(d, method), d.lower_count(), d.upper_count());
  }

  Vec image(const Morphism<F>& x, FunctorMethod method = FunctorMethod::Direct) const {
    check_morphism(x);
    Vec total;
    for (const auto& [d, c] : x.terms()) total = axpy(field_, total, c, image(d, method));
    return total;
  }

  ExactMatrix<F> matrix(const Morphism<F>& x, FunctorMethod method = FunctorMethod::Direct) const {
    return to_matrix(image(x, method), x.lower_count(), x.upper_count());
  }

  ExactMatrix<F> to_matrix(const Vec& v, int k, int l) const {
    const std::int64_t cols = dim(k);
    ExactMatrix<F> mat(field_, static_cast<std::size_t>(dim(l)), static_cast<std::size_t>(cols));
    for (const auto& [idx, val] : v) {
      mat.at(static_cast<std::size_t>(idx / cols), static_cast<std::size_t>(idx % cols)) = val;
    }
    return mat;
  }

  void check_morphism(const Morphism<F>& x) const {
    if (!(x.ring() == field_)) throw RingMismatchError("morphism ring differs from functor field");
    if (!field_.equal(x.delta(), delta())) {
      throw RingMismatchError("loop value " + field_.format(x.delta()) + " is not eps*m = " +
                              field_.format(delta()));
    }
  }

  // A morphism over the functor's field with delta = eps*m.
  Morphism<F> unit(const Diagram& d) const { return Morphism<F>::from_diagram(field_, delta(), d); }

 private:
  struct Option {
    int i;
    int j;
    Elem w;
  };

  std::int64_t flat_index(const Diagram& d, const std::vector<int>& digit) const {
    const int k = d.lower_count();
    std::int64_t in = 0, out = 0;
    for (int b = 0; b < k; ++b) in = in * spec_.m + digit[b];
    for (int t = 0; t < d.upper_count(); ++t) out = out * spec_.m + digit[k + t];
    return out * dim(k) + in;
  }

  std::map<std::int64_t, Elem> apply_layer(const Layer& layer,
                                           const std::map<std::int64_t, Elem>& state) const {
    const int m = spec_.m;
    std::map<std::int64_t, Elem> next;
    auto add = [&](std::int64_t idx, const Elem& v) {
      auto [it, inserted] = next.try_emplace(idx, v);
      if (!inserted) it->second = field_.add(it->second, v);
    };
    const std::int64_t low = dim(layer.right);  // weight of the digits right of the pattern
    for (const auto& [idx, v] : state) {
      const std::int64_t right = idx % low;
      std::int64_t rest = idx / low;
      switch (layer.generator) {
        case Generator::X: {
          const int j = static_cast<int>(rest % m);
          const int i = static_cast<int>((rest / m) % m);
          const std::int64_t left = rest / (static_cast<std::int64_t>(m) * m);
          const Elem w = spec_.epsilon == 1 ? v : field_.neg(v);
          add(((left * m + j) * m + i) * low + right, w);
          break;
        }
        case Generator::A: {
          const int j = static_cast<int>(rest % m);
          const int i = static_cast<int>((rest / m) % m);
          const std::int64_t left = rest / (static_cast<std::int64_t>(m) * m);
          const Elem& g = gram_[i * m + j];
          if (!field_.is_zero(g)) add(left * low + right, field_.mul(v, g));
          break;
        }
        case Generator::U: {
          for (const Option& o : coev_nz_) add(((rest * m + o.i) * m + o.j) * low + right, field_.mul(v, o.w));
          break;
        }
      }
    }
    std::map<std::int64_t, Elem> clean;
    for (auto& [i, v] : next) {
      if (!field_.is_zero(v)) clean.emplace(i, v);
    }
    return clean;
  }

  GroupSpec spec_;
  F field_;
  std::vector<Elem> gram_;
  std::vector<Elem> coev_;
  std::vector<Option> gram_nz_;
  std::vector<Option> coev_nz_;
};

// Diagram basis of B_k^l mapped to vectorized images; returns the rank.
template <class F>
std::size_t hom_rank(const Functor<F>& fn, int k, int l, int jobs = 1) {
  check_cells(fn.m(), k + l);
  const auto diagrams = enumerate_diagrams(k, l);
  std::vector<SparseVec<F>> images(diagrams.size());
  parallel_for(diagrams.size(), jobs, [&](std::size_t i) { images[i] = fn.image_direct(diagrams[i]); });
  return sparse_rank(fn.field(), images);
}

template <class F>
std::size_t kernel_dimension(const Functor<F>& fn, int k, int l, int jobs = 1) {
  return enumerate_diagrams(k, l).size() - hom_rank(fn, k, l, jobs);
}

// Morphisms spanning the kernel of F on B_k^l, one per dependent diagram.
template <class F>
std::vector<Morphism<F>> kernel_basis(const Functor<F>& fn, int k, int l, int jobs = 1) {
  check_cells(fn.m(), k + l);
  const auto diagrams = enumerate_diagrams(k, l);
  std::vector<SparseVec<F>> images(diagrams.size());
  parallel_for(diagrams.size(), jobs, [&](std::size_t i) { images[i] = fn.image_direct(diagrams[i]); });
  EchelonBasis<F> basis(fn.field());
  std::vector<Morphism<F>> out;
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    SparseVec<F> tag{{static_cast<std::int64_t>(i), fn.field().one()}};
    SparseVec<F> dep;
    if (!basis.insert(images[i], tag, &dep)) {
      Morphism<F> x(fn.field(), fn.delta(), k, l);
      for (const auto& [j, c] : dep) x.add_term(diagrams[static_cast<std::size_t>(j)], c);
      out.push_back(std::move(x));
    }
  }
  return out;
}

// Coordinates of x in the diagram basis listed by `index`.
template <class F>
SparseVec<F> coordinates(const Morphism<F>& x, const std::map<Diagram, std::int64_t>& index) {
  SparseVec<F> v;
  for (const auto& [d, c] : x.terms()) v.emplace_back(index.at(d), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

template <class F>
Morphism<F> from_coordinates(const F& field, const typename F::Elem& delta, int k, int l,
                             const SparseVec<F>& v, const std::vector<Diagram>& basis) {
  Morphism<F> x(field, delta, k, l);
  for (const auto& [i, c] : v) x.add_term(basis[static_cast<std::size_t>(i)], c);
  return x;
}

// span{ c o x o d : c in B_n^l, d in B_k^n } inside B_k^l, added to `into`.
// Computed as span{ c o y : y in a basis of span{ x o d } }.
template <class F>
void add_sandwich_span(const Morphism<F>& x, int k, int l, EchelonBasis<F>& into,
                       const std::map<Diagram, std::int64_t>& target_index) {
  const int n = x.lower_count();
  const F& field = x.ring();
  const auto right = enumerate_diagrams(k, n);
  const auto middle = enumerate_diagrams(k, x.upper_count());
  std::map<Diagram, std::int64_t> middle_index;
  for (std::size_t i = 0; i < middle.size(); ++i) middle_index[middle[i]] = static_cast<std::int64_t>(i);

  EchelonBasis<F> inner(field);
  for (const Diagram& d : right) {
    inner.insert(coordinates(compose(x, x.unit(d)), middle_index));
  }
  const auto left = enumerate_diagrams(x.upper_count(), l);
  for (const auto& row : inner.rows()) {
    const Morphism<F> y = from_coordinates(field, x.delta(), k, x.upper_count(), row, middle);
    for (const Diagram& c : left) {
      const auto z = compose(x.unit(c), y);
      if (!z.is_zero()) into.insert(coordinates(z, target_index));
    }
  }
}

// Dimension of the two-sided ideal of B_r generated by gen (x) I_{r-s}.
template <class F>
std::size_t ideal_span_dimension(int r, const Morphism<F>& gen) {
  const int s = gen.lower_count();
  if (gen.upper_count() != s || s > r) throw ValencyError("ideal generator must lie in B_s with s <= r");
  const auto g = tensor_identity(gen, 0, r - s);
  const auto basis = enumerate_diagrams(r, r);
  std::map<Diagram, std::int64_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<std::int64_t>(i);
  EchelonBasis<F> span(gen.ring());
  add_sandwich_span(g, r, r, span, index);
  return span.rank();
}

// Middle sizes n used for the slice of the tensor ideal generated by
// Sigma_eps(m+1): n >= m+1 with n = k mod 2, up to max(m+1, k+l) + 2.
std::vector<int> tensor_ideal_middle_sizes(int k, int l, int m);

// Dimension of span{ c o (Sigma_eps(m+1) (x) I_t) o d } in B_k^l.
template <class F>
std::size_t tensor_ideal_span_dimension(const Functor<F>& fn, int k, int l) {
  if ((k + l) % 2 != 0) return 0;
  const auto basis = enumerate_diagrams(k, l);
  std::map<Diagram, std::int64_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<std::int64_t>(i);
  EchelonBasis<F> span(fn.field());
  const auto s = sigma(fn.field(), fn.delta(), fn.eps(), fn.m() + 1);
  for (int n : tensor_ideal_middle_sizes(k, l, fn.m())) {
    add_sandwich_span(tensor_identity(s, 0, n - fn.m() - 1), k, l, span, index);
  }
  return span.rank();
}

// Tr F(D) = eps^r (eps m)^{closure_loops(D)}.
template <class F>
bool trace_check(const Functor<F>& fn, const Diagram& d) {
  const auto tr = fn.matrix(d).trace();
  auto expected = ring_pow(fn.field(), fn.delta(), closure_loops(d));
  if (fn.eps() == -1 && d.lower_count() % 2 == 1) expected = fn.field().neg(expected);
  return fn.field().equal(tr, expected);
}

// Basis of the Lie algebra {X : X^T G + G X = 0} over the rationals.
std::vector<ExactMatrix<RationalField>> lie_generators(const GroupSpec& spec);

// The determinant -1 reflection diag(-1, 1, ..., 1) for the orthogonal
// family; none for the symplectic family.
std::vector<ExactMatrix<RationalField>> group_elements(const GroupSpec& spec);

template <class F>
ExactMatrix<F> convert(const ExactMatrix<RationalField>& a, const F& field) {
  ExactMatrix<F> out(field, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = field.from_rational(a.at(i, j));
  }
  return out;
}

// Derived action sum_p I^{p} (x) y (x) I^{r-1-p} of a Lie algebra element.
template <class F>
ExactMatrix<F> derived_action(const ExactMatrix<F>& y, int r) {
  const F& f = y.field();
  const std::size_t m = y.rows();
  std::size_t n = 1;
  for (int i = 0; i < r; ++i) n *= m;
  ExactMatrix<F> total(f, n, n);
  for (int p = 0; p < r; ++p) {
    ExactMatrix<F> term = ExactMatrix<F>::identity(f, 1);
    for (int q = 0; q < r; ++q) term = kron(term, q == p ? y : ExactMatrix<F>::identity(f, m));
    total = total + term;
  }
  return total;
}

// Diagonal action g (x) ... (x) g of a group element.
template <class F>
ExactMatrix<F> group_action(const ExactMatrix<F>& g, int r) {
  ExactMatrix<F> term = ExactMatrix<F>::identity(g.field(), 1);
  for (int q = 0; q < r; ++q) term = kron(term, g);
  return term;
}

// dim End_G(V^{(x) r}) as the solution space of [rho(y), M] = 0 for every
// Lie generator y and M g = g M for the adjoined group elements.
template <class F>
std::size_t commutant_dimension(int r, const GroupSpec& spec, const F& field) {
  check_cells(spec.m, 2 * r);
  std::vector<ExactMatrix<F>> actions;
  for (const auto& y : lie_generators(spec)) actions.push_back(derived_action(convert(y, field), r));
  for (const auto& g : group_elements(spec)) actions.push_back(group_action(convert(g, field), r));
  std::size_t n = 1;
  for (int i = 0; i < r; ++i) n *= static_cast<std::size_t>(spec.m);
  auto unknown = [n](std::size_t a, std::size_t b) { return static_cast<std::int64_t>(a * n + b); };
  EchelonBasis<F> eqs(field);
  for (const auto& y : actions) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        // (yM - My)[a][b]
        std::map<std::int64_t, typename F::Elem> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (!field.is_zero(y.at(a, c))) {
            auto [it, ins] = row.try_emplace(unknown(c, b), y.at(a, c));
            if (!ins) it->second = field.add(it->second, y.at(a, c));
          }
          if (!field.is_zero(y.at(c, b))) {
            const auto v = field.neg(y.at(c, b));
            auto [it, ins] = row.try_emplace(unknown(a, c), v);
            if (!ins) it->second = field.add(it->second, v);
          }
        }
        auto vec = sparse_from_map(field, row);
        if (!vec.empty()) eqs.insert(std::move(vec));
      }
    }
  }
  return n * n - eqs.rank();
}

// The relations among P, C-hat and C-check, and their equivariance.
template <class F>
Report verify_pau(const Functor<F>& fn) {
  Report out;
  const auto [id, x, a, u] = fn.generators();
  const F& f = fn.field();
  const auto eps = f.from_int(fn.eps());
  const auto p = x.scaled(eps);  // F(X) = eps P
  const auto id2 = kron(id, id);
  const std::string tag = " " + fn.spec().name();
  auto eq = [&](const std::string& name, const ExactMatrix<F>& lhs, const ExactMatrix<F>& rhs) {
    out.push_back(check_true(name + tag, lhs == rhs));
  };
  eq("P^2 = id", p * p, id2);
  eq("braid for P", kron(p, id) * kron(id, p) * kron(p, id), kron(id, p) * kron(p, id) * kron(id, p));
  eq("P C-check = eps C-check", p * u, u.scaled(eps));
  eq("C-hat P = eps C-hat", a * p, a.scaled(eps));
  eq("C-hat C-check = eps dim V", a * u, ExactMatrix<F>::identity(f, 1).scaled(f.from_int(fn.eps() * fn.m())));
  eq("(C-hat x id)(id x C-check) = id", kron(a, id) * kron(id, u), id);
  eq("(id x C-hat)(C-check x id) = id", kron(id, a) * kron(u, id), id);
  eq("(C-hat x id)(id x P) = (id x C-hat)(P x id)", kron(a, id) * kron(id, p), kron(id, a) * kron(p, id));
  eq("(P x id)(id x C-check) = (id x P)(C-check x id)", kron(p, id) * kron(id, u), kron(id, p) * kron(u, id));
  const auto c0 = u;  // F(U) applied to 1 is c_0
  eq("P(c_0) = eps c_0", p * c0, c0.scaled(eps));

  // Equivariance under the Lie algebra and the adjoined group elements.
  bool equivariant = true;
  for (const auto& y0 : lie_generators(fn.spec())) {
    const auto y = convert(y0, f);
    const auto y2 = derived_action(y, 2);
    if (!(p * y2 == y2 * p)) equivariant = false;
    // The Lie algebra acts on K by zero.
    if (!((a * y2).is_zero()) || !((y2 * u).is_zero())) equivariant = false;
  }
  for (const auto& g0 : group_elements(fn.spec())) {
    const auto g = convert(g0, f);
    const auto g2 = group_action(g, 2);
    if (!(p * g2 == g2 * p) || !(a * g2 == a) || !(g2 * u == u)) equivariant = false;
  }
  out.push_back(check_true("P, C-hat, C-check are equivariant" + tag, equivariant));
  return out;
}

}  // namespace brauer
