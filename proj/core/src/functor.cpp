#include "brauer/functor.hpp"

#include <atomic>
#include <cstdlib>

namespace brauer {

std::string GroupSpec::name() const {
  return (family == Family::Orthogonal ? "O(" : "Sp(") + std::to_string(m) + ")";
}

namespace {

ExactMatrix<RationalField> inverse(const ExactMatrix<RationalField>& g) {
  const RationalField qq;
  const std::size_t n = g.rows();
  ExactMatrix<RationalField> a = g;
  auto inv = ExactMatrix<RationalField>::identity(qq, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a.at(p, col)) == 0) ++p;
    if (p == n) throw ValidationError("Gram matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a.at(p, j), a.at(col, j));
      std::swap(inv.at(p, j), inv.at(col, j));
    }
    const mpq_class s = 1 / a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= s;
      inv.at(col, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a.at(i, col)) == 0) continue;
      const mpq_class f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace

GroupSpec group_spec(Family family, int m) {
  if (m < 1) throw RangeError("dimension m must be at least 1");
  if (family == Family::Symplectic && m % 2 != 0) {
    throw RangeError("symplectic groups need even m, got " + std::to_string(m));
  }
  const RationalField qq;
  GroupSpec spec;
  spec.family = family;
  spec.m = m;
  spec.epsilon = family == Family::Orthogonal ? 1 : -1;
  spec.gram = ExactMatrix<RationalField>(qq, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  if (family == Family::Orthogonal) {
    spec.gram = ExactMatrix<RationalField>::identity(qq, static_cast<std::size_t>(m));
  } else {
    const int n = m / 2;
    for (int i = 0; i < n; ++i) {
      spec.gram.at(i, n + i) = 1;
      spec.gram.at(n + i, i) = -1;
    }
  }
  // (dual_i, b_j) = delta_ij, i.e. dual_change * gram = 1.
  spec.dual_change = inverse(spec.gram);
  return spec;
}

Family parse_family(const std::string& text) {
  if (text == "o" || text == "O" || text == "orthogonal") return Family::Orthogonal;
  if (text == "sp" || text == "Sp" || text == "symplectic") return Family::Symplectic;
  throw ValidationError("unknown group family '" + text + "' (expected o or sp)");
}

std::uint64_t max_cells() {
  if (const char* env = std::getenv("BRAUER_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 10'000'000ULL;
}

void check_cells(int m, int nodes) {
  const std::uint64_t limit = max_cells();
  std::uint64_t cells = 1;
  for (int i = 0; i < nodes; ++i) {
    cells *= static_cast<std::uint64_t>(m);
    if (cells > limit) {
      throw ResourceError(std::to_string(m) + "^" + std::to_string(nodes) +
                          " exceeds the cell budget of " + std::to_string(limit) +
                          " (set BRAUER_MAX_CELLS to raise it)");
    }
  }
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < n; i = next++) body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<int> tensor_ideal_middle_sizes(int k, int l, int m) {
  std::vector<int> out;
  int n = m + 1;
  if ((n - k) % 2 != 0) ++n;
  const int top = std::max(m + 1, k + l) + 2;
  for (; n <= top; n += 2) out.push_back(n);
  return out;
}

std::vector<ExactMatrix<RationalField>> lie_generators(const GroupSpec& spec) {
  const RationalField qq;
  const int m = spec.m;
  const auto mm = static_cast<std::size_t>(m * m);
  // Unknown X(l, c) has index l*m + c; equation (i, j) reads
  // sum_l X(l, i) G(l, j) + sum_l G(i, l) X(l, j) = 0.
  ExactMatrix<RationalField> system(qq, mm, mm);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const auto row = static_cast<std::size_t>(i * m + j);
      for (int l = 0; l < m; ++l) {
        system.at(row, static_cast<std::size_t>(l * m + i)) += spec.gram.at(l, j);
        system.at(row, static_cast<std::size_t>(l * m + j)) += spec.gram.at(i, l);
      }
    }
  }
  std::vector<ExactMatrix<RationalField>> out;
  for (const auto& v : nullspace_basis(system)) {
    ExactMatrix<RationalField> x(qq, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (std::size_t t = 0; t < mm; ++t) x.at(t / m, t % m) = v[t];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<ExactMatrix<RationalField>> group_elements(const GroupSpec& spec) {
  if (spec.family != Family::Orthogonal) return {};
  auto g = ExactMatrix<RationalField>::identity(RationalField{}, static_cast<std::size_t>(spec.m));
  g.at(0, 0) = -1;
  return {g};
}

}  // namespace brauer
