#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "brauer/elements.hpp"
#include "brauer/functor.hpp"
#include "brauer/identities.hpp"
#include "brauer/suites.hpp"
#include "brauer/word.hpp"

namespace brauer::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string format = "json";
  std::string delta;
  std::uint64_t modulus = 0;
  int jobs = 1;
};

struct GroupArgs {
  std::string family = "o";
  int m = 0;
  int n = 0;
  bool m_set = false;
  bool n_set = false;

  GroupSpec spec() const {
    const Family f = parse_family(family);
    if (f == Family::Symplectic && n_set) {
      if (m_set && m != 2 * n) throw ValidationError("--m and --n disagree");
      return group_spec(f, 2 * n);
    }
    if (!m_set) {
      throw ValidationError(f == Family::Symplectic ? "sp needs --n (or an even --m)" : "o needs --m");
    }
    return group_spec(f, m);
  }
};

class Session {
 public:
  Session(const Common& common, std::ostream& out) : common_(common), out_(out) {}

  bool text() const { return common_.format == "text"; }

  void emit(const json& j, const std::string& text_form) const {
    if (text()) {
      out_ << text_form << "\n";
    } else {
      out_ << j.dump() << "\n";
    }
  }

 private:
  const Common& common_;
  std::ostream& out_;
};

json read_json(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ValidationError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON input: ") + e.what());
  }
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Loop value recorded in a morphism document, if any.
std::string embedded_delta(const json& j) {
  if (j.is_object() && j.contains("delta")) return scalar_text(j.at("delta"));
  return "";
}

template <class R>
Morphism<R> load_morphism(const json& j, const R& ring, const typename R::Elem& delta) {
  if (!j.is_object() || !j.contains("k") || !j.contains("l")) {
    throw ValidationError("expected a diagram {k, l, pairs} or a morphism {k, l, terms}");
  }
  if (!j.contains("terms")) {
    Diagram d;
    from_json(j, d);
    return Morphism<R>::from_diagram(ring, delta, d);
  }
  Morphism<R> out(ring, delta, j.at("k").get<int>(), j.at("l").get<int>());
  for (const auto& t : j.at("terms")) {
    Diagram d;
    from_json(t.at("diagram"), d);
    out.add_term(d, ring.parse(scalar_text(t.at("coeff"))));
  }
  return out;
}

// Chooses the coefficient ring: GF(p) under --modulus, QQ[d] for a symbolic
// loop value, QQ otherwise.
template <class Fn>
int with_ring(const Common& c, const std::string& fallback_delta, Fn&& fn) {
  std::string delta = c.delta.empty() ? fallback_delta : c.delta;
  if (delta.empty()) delta = "symbolic";
  if (c.modulus != 0) {
    if (delta == "symbolic") throw ValidationError("a symbolic loop value needs characteristic 0");
    const PrimeField f(c.modulus);
    return fn(f, f.parse(delta));
  }
  if (delta == "symbolic") {
    const DeltaPolyRing r;
    return fn(r, r.indeterminate());
  }
  const RationalField q;
  return fn(q, q.parse(delta));
}

// Fields only: QQ or GF(p).
template <class Fn>
int with_field(const Common& c, Fn&& fn) {
  if (c.modulus != 0) return fn(PrimeField(c.modulus));
  return fn(RationalField{});
}

template <class R>
void emit_morphism(const Session& s, const Morphism<R>& x) {
  s.emit(morphism_to_json(x), x.to_string());
}

Morphism<PrimeField> maybe_reduce(const Morphism<RationalField>& x, std::uint64_t p) { return reduce_mod_p(x, p); }

void emit_rational(const Session& s, const Common& c, const Morphism<RationalField>& x) {
  if (c.modulus != 0) {
    emit_morphism(s, maybe_reduce(x, c.modulus));
  } else {
    emit_morphism(s, x);
  }
}

template <class F>
std::string matrix_text(const ExactMatrix<F>& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(m.field().format(m.at(i, j)));
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j ? " " : "") << std::setw(static_cast<int>(width)) << cells[i * m.cols() + j];
    }
    if (i + 1 < m.rows()) os << "\n";
  }
  return os.str();
}

std::string records_text(const Report& r) {
  std::size_t width = 0;
  for (const auto& c : r) width = std::max(width, c.name.size());
  std::ostringstream os;
  for (const auto& c : r) {
    os << (c.pass ? "PASS  " : "FAIL  ");
    if (c.pass) {
      os << c.name;
    } else {
      os << std::left << std::setw(static_cast<int>(width)) << c.name << "  expected " << c.expected
         << ", computed " << c.computed;
    }
    os << "\n";
  }
  os << failure_count(r) << " of " << r.size() << " checks failed";
  return os.str();
}

json records_json(const std::string& suite, const Report& r) {
  json records = json::array();
  for (const auto& c : r) {
    json j;
    to_json(j, c);
    records.push_back(j);
  }
  return {{"suite", suite}, {"pass", all_pass(r)}, {"failures", failure_count(r)}, {"records", records}};
}

void add_group_options(CLI::App* sub, GroupArgs& g) {
  sub->add_option("--family", g.family, "Group family: o or sp")->check(CLI::IsMember({"o", "sp"}));
  sub->add_option_function<int>("--m", [&g](int v) { g.m = v; g.m_set = true; }, "Dimension of V");
  sub->add_option_function<int>("--n", [&g](int v) { g.n = v; g.n_set = true; }, "Rank of Sp(2n)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brauer category computations and their orthogonal and symplectic images", "brauer"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--delta", common.delta, "Loop value: \"symbolic\" or an exact rational");
  app.add_option("--modulus", common.modulus, "Work over the prime field GF(p)");
  app.add_option("--jobs", common.jobs, "Threads for basis evaluation")->check(CLI::PositiveNumber);

  Session session(common, out);
  std::function<int()> action;
  std::vector<std::string> inputs;
  GroupArgs group;
  int r = 0, n = 0, m = 0, p = 0, q = 0, eps = 1, k = 0, l = 0;
  std::string text_arg, method, op = "star", suite;
  bool flag = false;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // compose A B prints A o B, that is B followed by A.
  auto* c_compose = sub("compose", "Compose two diagrams or morphisms: A o B");
  c_compose->add_option("inputs", inputs, "Two JSON documents (or @file)")->expected(2)->required();
  c_compose->callback([&] {
    action = [&] {
      const json a = read_json(inputs[0]), b = read_json(inputs[1]);
      return with_ring(common, embedded_delta(a), [&](const auto& ring, const auto& delta) {
        emit_morphism(session, load_morphism(a, ring, delta) * load_morphism(b, ring, delta));
        return 0;
      });
    };
  });

  auto* c_tensor = sub("tensor", "Tensor product of two diagrams or morphisms");
  c_tensor->add_option("inputs", inputs, "Two JSON documents (or @file)")->expected(2)->required();
  c_tensor->callback([&] {
    action = [&] {
      const json a = read_json(inputs[0]), b = read_json(inputs[1]);
      return with_ring(common, embedded_delta(a), [&](const auto& ring, const auto& delta) {
        emit_morphism(session, tensor(load_morphism(a, ring, delta), load_morphism(b, ring, delta)));
        return 0;
      });
    };
  });

  auto* c_star = sub("star", "Apply the involution *, # or the anti-involution ast");
  c_star->add_option("input", text_arg, "JSON document (or @file)")->required();
  c_star->add_option("--op", op, "star, sharp or ast")->check(CLI::IsMember({"star", "sharp", "ast"}));
  c_star->callback([&] {
    action = [&] {
      const json a = read_json(text_arg);
      return with_ring(common, embedded_delta(a), [&](const auto& ring, const auto& delta) {
        const auto x = load_morphism(a, ring, delta);
        emit_morphism(session, op == "star" ? star(x) : op == "sharp" ? sharp(x) : ast(x));
        return 0;
      });
    };
  });

  int domain = -1;
  auto* c_weval = sub("word-eval", "Evaluate a word in X, A, U");
  c_weval->add_option("--word", text_arg, "Layers bottom to top: \"a:Y:b; ...\"")->required();
  c_weval->add_option("--domain", domain, "Domain width (needed for an empty word)");
  c_weval->callback([&] {
    action = [&] {
      const Word w = parse_word(text_arg, domain >= 0 ? std::optional<int>(domain) : std::nullopt);
      const ScaledDiagram v = evaluate_word(w);
      json dj;
      to_json(dj, v.diagram);
      session.emit({{"delta_power", v.delta_power}, {"diagram", dj}},
                   "d^" + std::to_string(v.delta_power) + " " + v.diagram.to_string());
      return 0;
    };
  });

  auto* c_wsynth = sub("word-synth", "Write a diagram as a word in X, A, U");
  c_wsynth->add_option("input", text_arg, "Diagram JSON (or @file)")->required();
  c_wsynth->callback([&] {
    action = [&] {
      Diagram d;
      from_json(read_json(text_arg), d);
      const Word w = synthesize_word(d);
      session.emit({{"domain", w.domain}, {"layers", w.layers.size()}, {"word", format_word(w)}}, format_word(w));
      return 0;
    };
  });

  auto* c_sigma = sub("sigma", "Sigma_eps(r), the signed sum of all permutations");
  c_sigma->add_option("--r", r, "Degree")->required()->check(CLI::NonNegativeNumber);
  c_sigma->add_option("--eps", eps, "+1 or -1")->check(CLI::IsMember({1, -1}));
  c_sigma->callback([&] {
    action = [&] {
      return with_ring(common, "", [&](const auto& ring, const auto& delta) {
        emit_morphism(session, sigma(ring, delta, eps, r));
        return 0;
      });
    };
  });

  auto* c_phi = sub("phi", "Phi(n) in B_{n+1}(-2n)");
  c_phi->add_option("--n", n, "n >= 1")->required();
  c_phi->callback([&] {
    action = [&] {
      emit_rational(session, common, phi(n));
      return 0;
    };
  });

  method = "rotation";
  auto* c_ep = sub("ep", "E_p in B_{m+1}(m)");
  c_ep->add_option("--m", m, "m >= 1")->required();
  c_ep->add_option("--p", p, "0 <= p <= m+1")->required();
  c_ep->add_option("--method", method, "rotation or formula")->check(CLI::IsMember({"rotation", "formula"}));
  c_ep->callback([&] {
    action = [&] {
      const RationalField qq;
      emit_rational(session, common,
                    method == "formula" ? e_p_formula(m, p) : e_p_rotation(qq, mpq_class(m), m, p));
      return 0;
    };
  });

  auto* c_dpq = sub("dpq", "D(p,q): Sigma_-(2n+1) with p legs turned and q of them joined");
  c_dpq->add_option("--n", n, "n >= 1")->required();
  c_dpq->add_option("--p", p)->required();
  c_dpq->add_option("--q", q)->required();
  c_dpq->callback([&] {
    action = [&] {
      return with_ring(common, std::to_string(-2 * n), [&](const auto& ring, const auto& delta) {
        emit_morphism(session, d_pq(ring, delta, n, p, q));
        return 0;
      });
    };
  });

  auto* c_fmat = sub("functor-matrix", "Matrix of F on a diagram or morphism");
  add_group_options(c_fmat, group);
  c_fmat->add_option("input", text_arg, "JSON document (or @file)")->required();
  c_fmat->add_option("--method", method, "direct or layered")->check(CLI::IsMember({"direct", "layered"}));
  c_fmat->callback([&] {
    if (c_fmat->get_option("--method")->count() == 0) method = "direct";
    action = [&] {
      const GroupSpec spec = group.spec();
      const json a = read_json(text_arg);
      return with_field(common, [&](const auto& field) {
        const Functor fn(spec, field);
        const auto x = load_morphism(a, field, fn.delta());
        const auto mat = fn.matrix(x, method == "layered" ? FunctorMethod::Layered : FunctorMethod::Direct);
        session.emit(matrix_to_json(mat), matrix_text(mat));
        return 0;
      });
    };
  });

  auto* c_trace = sub("trace", "Trace of F(x) against the Jones trace");
  add_group_options(c_trace, group);
  c_trace->add_option("input", text_arg, "JSON document (or @file)")->required();
  c_trace->callback([&] {
    action = [&] {
      const GroupSpec spec = group.spec();
      const json a = read_json(text_arg);
      return with_field(common, [&](const auto& field) {
        const Functor fn(spec, field);
        const auto x = load_morphism(a, field, fn.delta());
        const auto tr = fn.matrix(x).trace();
        const auto jones = jones_trace_symbolic(x, fn.eps());
        const bool pass = field.equal(tr, jones);
        session.emit({{"trace", field.format(tr)}, {"jones", field.format(jones)}, {"pass", pass}},
                     "trace " + field.format(tr) + "\njones " + field.format(jones));
        return pass ? 0 : static_cast<int>(kVerificationFailure);
      });
    };
  });

  auto* c_rank = sub("rank", "Rank of F on the (k,l) diagrams");
  add_group_options(c_rank, group);
  c_rank->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  c_rank->add_option("--l", l)->required()->check(CLI::NonNegativeNumber);
  c_rank->callback([&] {
    action = [&] {
      const GroupSpec spec = group.spec();
      return with_field(common, [&](const auto& field) {
        const Functor fn(spec, field);
        const auto rank = static_cast<long long>(hom_rank(fn, k, l, common.jobs));
        const long long ker = diagram_count(k, l) - rank;
        session.emit({{"rank", rank}, {"kernel_dim", ker}},
                     "rank " + std::to_string(rank) + "\nkernel_dim " + std::to_string(ker));
        return 0;
      });
    };
  });

  auto* c_kernel = sub("kernel", "Basis of the kernel of F on the (k,l) diagrams");
  add_group_options(c_kernel, group);
  c_kernel->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  c_kernel->add_option("--l", l)->required()->check(CLI::NonNegativeNumber);
  c_kernel->add_flag("--dimension-only", flag, "Skip the basis");
  c_kernel->callback([&] {
    action = [&] {
      const GroupSpec spec = group.spec();
      return with_field(common, [&](const auto& field) {
        const Functor fn(spec, field);
        if (flag) {
          const auto dim = kernel_dimension(fn, k, l, common.jobs);
          session.emit({{"kernel_dim", dim}}, "kernel_dim " + std::to_string(dim));
          return 0;
        }
        const auto basis = kernel_basis(fn, k, l, common.jobs);
        json items = json::array();
        std::string text_form = "kernel_dim " + std::to_string(basis.size());
        for (const auto& b : basis) {
          items.push_back(morphism_to_json(b));
          text_form += "\n" + b.to_string();
        }
        session.emit({{"kernel_dim", basis.size()}, {"basis", items}}, text_form);
        return 0;
      });
    };
  });

  std::string generator;
  auto* c_ideal = sub("ideal-span", "Dimension of an ideal of B_r, or of a tensor ideal slice");
  add_group_options(c_ideal, group);
  c_ideal->add_option("--r", r, "Degree of the ambient algebra");
  c_ideal->add_option("--generator", generator, "phi:N, ep:M:P, or a morphism JSON (or @file)");
  c_ideal->add_flag("--tensor", flag, "Slice (k,l) of the tensor ideal of Sigma_eps(m+1)");
  c_ideal->add_option("--k", k)->check(CLI::NonNegativeNumber);
  c_ideal->add_option("--l", l)->check(CLI::NonNegativeNumber);
  c_ideal->callback([&] {
    action = [&] {
      if (flag) {
        const GroupSpec spec = group.spec();
        return with_field(common, [&](const auto& field) {
          const Functor fn(spec, field);
          const auto dim = tensor_ideal_span_dimension(fn, k, l);
          session.emit({{"dimension", dim}}, "dimension " + std::to_string(dim));
          return 0;
        });
      }
      if (generator.empty()) throw ValidationError("ideal-span needs --generator or --tensor");
      Morphism<RationalField> gen(RationalField{}, 0, 0, 0);
      if (generator.rfind("phi:", 0) == 0) {
        gen = phi(std::stoi(generator.substr(4)));
      } else if (generator.rfind("ep:", 0) == 0) {
        const auto colon = generator.find(':', 3);
        if (colon == std::string::npos) throw ValidationError("expected ep:M:P");
        const int gm = std::stoi(generator.substr(3, colon - 3));
        gen = e_p_rotation(RationalField{}, mpq_class(gm), gm, std::stoi(generator.substr(colon + 1)));
      } else {
        const json a = read_json(generator);
        const std::string d = common.delta.empty() ? embedded_delta(a) : common.delta;
        if (d.empty() || d == "symbolic") throw ValidationError("ideal-span needs a numeric loop value");
        gen = load_morphism(a, RationalField{}, RationalField{}.parse(d));
      }
      const int degree = r > 0 ? r : gen.lower_count();
      std::size_t dim = 0;
      if (common.modulus != 0) {
        dim = ideal_span_dimension(degree, reduce_mod_p(gen, common.modulus));
      } else {
        dim = ideal_span_dimension(degree, gen);
      }
      session.emit({{"r", degree}, {"dimension", dim}}, "dimension " + std::to_string(dim));
      return 0;
    };
  });

  auto* c_verify = sub("verify", "Run a verification suite");
  std::vector<std::string> names{"pau", "all"};
  for (const auto& s : suites()) names.push_back(s.name);
  c_verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(names));
  add_group_options(c_verify, group);
  c_verify->callback([&] {
    action = [&] {
      SuiteOptions opt;
      opt.jobs = common.jobs;
      std::vector<std::pair<std::string, Report>> results;
      if (suite == "pau") {
        if (group.m_set || group.n_set) {
          results.emplace_back("pau", pau_suite(group.spec()));
        } else {
          Report all;
          for (auto [f, dim] : {std::pair{Family::Orthogonal, 2}, std::pair{Family::Orthogonal, 3},
                                std::pair{Family::Symplectic, 2}, std::pair{Family::Symplectic, 4}}) {
            append(all, pau_suite(group_spec(f, dim)));
          }
          results.emplace_back("pau", all);
        }
      } else if (suite == "all") {
        for (const auto& s : suites()) results.emplace_back(s.name, s.run(opt));
        Report pau;
        for (auto [f, dim] : {std::pair{Family::Orthogonal, 2}, std::pair{Family::Orthogonal, 3},
                              std::pair{Family::Symplectic, 2}, std::pair{Family::Symplectic, 4}}) {
          append(pau, pau_suite(group_spec(f, dim)));
        }
        results.emplace_back("pau", pau);
      } else {
        results.emplace_back(suite, find_suite(suite).run(opt));
      }
      bool pass = true;
      json docs = json::array();
      std::string text_form;
      for (const auto& [name, report] : results) {
        pass = pass && all_pass(report);
        docs.push_back(records_json(name, report));
        if (!text_form.empty()) text_form += "\n";
        text_form += "[" + name + "]\n" + records_text(report);
      }
      session.emit(results.size() == 1 ? docs[0] : json{{"pass", pass}, {"suites", docs}}, text_form);
      return pass ? 0 : static_cast<int>(kVerificationFailure);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const Error& e) {
    err << "brauer: " << e.what() << "\n";
    return kUsageError;
  } catch (const json::exception& e) {
    err << "brauer: malformed input: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "brauer: invalid number: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "brauer: number out of range: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace brauer::cli
