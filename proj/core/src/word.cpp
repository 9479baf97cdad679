#include "brauer/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

char generator_symbol(Generator g) {
  switch (g) {
    case Generator::X: return 'X';
    case Generator::A: return 'A';
    case Generator::U: return 'U';
  }
  return '?';
}

Diagram Layer::diagram() const {
  Diagram y;
  switch (generator) {
    case Generator::X: y = crossing(); break;
    case Generator::A: y = cap(); break;
    case Generator::U: y = cup(); break;
  }
  return tensor(tensor(identity(left), y), identity(right));
}

void Word::validate() const {
  if (domain < 0) throw ValencyError("word domain is negative");
  int width = domain;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const Layer& l = layers[i];
    if (l.left < 0 || l.right < 0) throw ValencyError("layer with negative padding");
    if (l.input_width() != width) {
      throw ValencyError("layer " + std::to_string(i) + " expects " +
                         std::to_string(l.input_width()) + " strands but receives " +
                         std::to_string(width));
    }
    width = l.output_width();
  }
}

int Word::codomain() const { return width_at(layers.size()); }

int Word::width_at(std::size_t position) const {
  int width = domain;
  for (std::size_t i = 0; i < position && i < layers.size(); ++i) width = layers[i].output_width();
  return width;
}

ScaledDiagram evaluate_word(const Word& w) {
  w.validate();
  ScaledDiagram out{0, identity(w.domain)};
  for (const Layer& l : w.layers) {
    auto [loops, d] = compose(l.diagram(), out.diagram);
    out.delta_power += loops;
    out.diagram = std::move(d);
  }
  return out;
}

ScaledDiagram evaluate_word(const ScaledWord& w) {
  ScaledDiagram out = evaluate_word(w.word);
  out.delta_power += w.delta_power;
  return out;
}

namespace {

void bubble_sort(std::vector<int>& labels, std::vector<Layer>& out) {
  const int w = static_cast<int>(labels.size());
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 0; i + 1 < w; ++i) {
      if (labels[i] > labels[i + 1]) {
        std::swap(labels[i], labels[i + 1]);
        out.push_back({i, Generator::X, w - i - 2});
        swapped = true;
      }
    }
  }
}

}  // namespace

Word synthesize_word(const Diagram& d) {
  const int k = d.lower_count();
  const int l = d.upper_count();
  Word w{k, {}};

  std::vector<int> through;  // bottom nodes, ordered by top endpoint
  std::vector<Diagram::Pair> bottom_arcs, top_arcs;
  for (int i = 0; i < k; ++i) {
    if (d.partner(i) >= k) through.push_back(i);
  }
  std::sort(through.begin(), through.end(),
            [&](int a, int b) { return d.partner(a) < d.partner(b); });
  for (const auto& [a, b] : d.pairs()) {
    if (b < k) bottom_arcs.emplace_back(a, b);
    if (a >= k) top_arcs.emplace_back(a - k, b - k);
  }

  std::vector<int> labels(static_cast<std::size_t>(k));
  int next = 0;
  for (int node : through) labels[node] = next++;
  for (const auto& [a, b] : bottom_arcs) {
    labels[a] = next++;
    labels[b] = next++;
  }
  bubble_sort(labels, w.layers);

  int width = k;
  for (std::size_t j = 0; j < bottom_arcs.size(); ++j) {
    w.layers.push_back({width - 2, Generator::A, 0});
    width -= 2;
  }
  for (std::size_t j = 0; j < top_arcs.size(); ++j) {
    w.layers.push_back({width, Generator::U, 0});
    width += 2;
  }

  std::vector<int> targets;
  for (int node : through) targets.push_back(d.partner(node) - k);
  for (const auto& [a, b] : top_arcs) {
    targets.push_back(a);
    targets.push_back(b);
  }
  (void)l;
  bubble_sort(targets, w.layers);
  return w;
}

Word parse_word(std::string_view text, std::optional<int> domain) {
  Word w;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::string t;
    for (char c : item) {
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (t.empty()) continue;
    const auto c1 = t.find(':');
    const auto c2 = t.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || c2 != c1 + 2) {
      throw ValidationError("malformed layer '" + item + "', expected a:Y:b");
    }
    Layer layer;
    try {
      layer.left = std::stoi(t.substr(0, c1));
      layer.right = std::stoi(t.substr(c2 + 1));
    } catch (const std::exception&) {
      throw ValidationError("malformed layer '" + item + "', expected a:Y:b");
    }
    switch (t[c1 + 1]) {
      case 'X': layer.generator = Generator::X; break;
      case 'A': layer.generator = Generator::A; break;
      case 'U': layer.generator = Generator::U; break;
      default: throw ValidationError("unknown generator in '" + item + "'");
    }
    w.layers.push_back(layer);
  }
  if (domain) {
    w.domain = *domain;
  } else if (!w.layers.empty()) {
    w.domain = w.layers.front().input_width();
  } else {
    throw ValidationError("empty word needs an explicit domain");
  }
  w.validate();
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Layer& l : w.layers) {
    if (!out.empty()) out += "; ";
    out += std::to_string(l.left) + ":" + generator_symbol(l.generator) + ":" + std::to_string(l.right);
  }
  return out;
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Identity: return "identity";
    case Rule::XX: return "XX";
    case Rule::Braid: return "braid";
    case Rule::AX: return "AX";
    case Rule::AU: return "AU";
    case Rule::Slide: return "slide";
    case Rule::Straighten: return "straighten";
  }
  return "?";
}

std::string transform_name(Transform t) {
  switch (t) {
    case Transform::None: return "base";
    case Transform::Star: return "star";
    case Transform::Sharp: return "sharp";
    case Transform::StarSharp: return "star-sharp";
  }
  return "?";
}

namespace {

constexpr Layer X(int a, int b) { return {a, Generator::X, b}; }
constexpr Layer A(int a, int b) { return {a, Generator::A, b}; }
constexpr Layer U(int a, int b) { return {a, Generator::U, b}; }

Relation base_relation(Rule rule) {
  switch (rule) {
    case Rule::Identity:
      return {rule, Transform::None, {0, {1, {}}}, {0, {1, {}}}};
    case Rule::XX:
      return {rule, Transform::None, {0, {2, {X(0, 0), X(0, 0)}}}, {0, {2, {}}}};
    case Rule::Braid:
      return {rule, Transform::None, {0, {3, {X(0, 1), X(1, 0), X(0, 1)}}},
              {0, {3, {X(1, 0), X(0, 1), X(1, 0)}}}};
    case Rule::AX:
      return {rule, Transform::None, {0, {2, {X(0, 0), A(0, 0)}}}, {0, {2, {A(0, 0)}}}};
    case Rule::AU:
      return {rule, Transform::None, {0, {0, {U(0, 0), A(0, 0)}}}, {1, {0, {}}}};
    case Rule::Slide:
      return {rule, Transform::None, {0, {3, {X(1, 0), A(0, 1)}}}, {0, {3, {X(0, 1), A(1, 0)}}}};
    case Rule::Straighten:
      return {rule, Transform::None, {0, {1, {U(1, 0), A(0, 1)}}}, {0, {1, {}}}};
  }
  throw ValidationError("unknown rule");
}

Word star_word(const Word& w) {
  Word out{w.codomain(), {}};
  for (auto it = w.layers.rbegin(); it != w.layers.rend(); ++it) {
    Layer l = *it;
    if (l.generator == Generator::A) {
      l.generator = Generator::U;
    } else if (l.generator == Generator::U) {
      l.generator = Generator::A;
    }
    out.layers.push_back(l);
  }
  return out;
}

Word sharp_word(const Word& w) {
  Word out{w.domain, {}};
  for (Layer l : w.layers) {
    std::swap(l.left, l.right);
    out.layers.push_back(l);
  }
  return out;
}

Word transform_word(const Word& w, Transform t) {
  switch (t) {
    case Transform::None: return w;
    case Transform::Star: return star_word(w);
    case Transform::Sharp: return sharp_word(w);
    case Transform::StarSharp: return star_word(sharp_word(w));
  }
  return w;
}

Word pad(const Word& w, int left, int right) {
  Word out{w.domain + left + right, {}};
  for (Layer l : w.layers) {
    l.left += left;
    l.right += right;
    out.layers.push_back(l);
  }
  return out;
}

struct Match {
  RelationSide from;
  RelationSide to;
};

std::optional<Match> locate(const ScaledWord& w, const RelationInstance& inst) {
  const Relation rel = relation(inst.rule, inst.transform);
  const RelationSide& from = inst.forward ? rel.lhs : rel.rhs;
  const RelationSide& to = inst.forward ? rel.rhs : rel.lhs;
  if (inst.position > w.word.layers.size() || inst.pad_left < 0) return std::nullopt;
  const int width = w.word.width_at(inst.position);
  const int pad_right = width - from.word.domain - inst.pad_left;
  if (pad_right < 0) return std::nullopt;
  const Word pattern = pad(from.word, inst.pad_left, pad_right);
  if (inst.position + pattern.layers.size() > w.word.layers.size()) return std::nullopt;
  if (!std::equal(pattern.layers.begin(), pattern.layers.end(),
                  w.word.layers.begin() + static_cast<std::ptrdiff_t>(inst.position))) {
    return std::nullopt;
  }
  if (w.delta_power - from.delta_power + to.delta_power < 0) return std::nullopt;
  return Match{{from.delta_power, pattern}, {to.delta_power, pad(to.word, inst.pad_left, pad_right)}};
}

}  // namespace

Relation relation(Rule rule, Transform transform) {
  Relation r = base_relation(rule);
  r.transform = transform;
  r.lhs.word = transform_word(r.lhs.word, transform);
  r.rhs.word = transform_word(r.rhs.word, transform);
  return r;
}

bool is_applicable(const ScaledWord& w, const RelationInstance& inst) {
  return locate(w, inst).has_value();
}

ScaledWord apply_relation(const ScaledWord& w, const RelationInstance& inst) {
  const auto m = locate(w, inst);
  if (!m) {
    throw ValidationError("relation " + rule_name(inst.rule) + "/" + transform_name(inst.transform) +
                          " does not match at layer " + std::to_string(inst.position));
  }
  ScaledWord out;
  out.delta_power = w.delta_power - m->from.delta_power + m->to.delta_power;
  out.word.domain = w.word.domain;
  const auto begin = w.word.layers.begin();
  const auto pos = static_cast<std::ptrdiff_t>(inst.position);
  out.word.layers.assign(begin, begin + pos);
  out.word.layers.insert(out.word.layers.end(), m->to.word.layers.begin(), m->to.word.layers.end());
  out.word.layers.insert(out.word.layers.end(),
                         begin + pos + static_cast<std::ptrdiff_t>(m->from.word.layers.size()),
                         w.word.layers.end());
  return out;
}

std::vector<RelationInstance> applicable_instances(const ScaledWord& w) {
  std::vector<RelationInstance> out;
  for (Rule rule : kAllRules) {
    for (Transform t : kAllTransforms) {
      for (bool forward : {true, false}) {
        for (std::size_t pos = 0; pos <= w.word.layers.size(); ++pos) {
          const int width = w.word.width_at(pos);
          for (int left = 0; left <= width; ++left) {
            RelationInstance inst{rule, t, pos, forward, left};
            if (is_applicable(w, inst)) out.push_back(inst);
          }
        }
      }
    }
  }
  return out;
}

std::vector<RelationCheck> verify_relation_soundness() {
  std::vector<RelationCheck> out;
  for (Rule rule : kAllRules) {
    for (Transform t : kAllTransforms) {
      const Relation rel = relation(rule, t);
      const ScaledDiagram lhs = evaluate_word(ScaledWord{rel.lhs.delta_power, rel.lhs.word});
      const ScaledDiagram rhs = evaluate_word(ScaledWord{rel.rhs.delta_power, rel.rhs.word});
      out.push_back({rule, t, lhs, rhs, lhs == rhs});
    }
  }
  return out;
}

}  // namespace brauer
