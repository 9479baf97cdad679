#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/diagram.hpp"

namespace brauer {

enum class Generator { X, A, U };

char generator_symbol(Generator g);

// I^{(x)left} (x) Y (x) I^{(x)right}.
struct Layer {
  int left = 0;
  Generator generator = Generator::X;
  int right = 0;

  int input_width() const { return left + right + (generator == Generator::U ? 0 : 2); }
  int output_width() const { return left + right + (generator == Generator::A ? 0 : 2); }
  Diagram diagram() const;

  friend bool operator==(const Layer&, const Layer&) = default;
};

// Layers listed bottom to top, acting on `domain` strands.
struct Word {
  int domain = 0;
  std::vector<Layer> layers;

  // Throws ValencyError on the first inconsistent layer.
  void validate() const;
  int codomain() const;
  // Valency just below layer `position` (position == size gives the codomain).
  int width_at(std::size_t position) const;

  friend bool operator==(const Word&, const Word&) = default;
};

struct ScaledWord {
  int delta_power = 0;
  Word word;

  friend bool operator==(const ScaledWord&, const ScaledWord&) = default;
};

ScaledDiagram evaluate_word(const Word& w);
ScaledDiagram evaluate_word(const ScaledWord& w);

// A word with no loops evaluating to exactly `d`: bottom strands are sorted
// by crossings, bottom arcs capped, cups added, and the result routed to the
// top by a second round of crossings.
Word synthesize_word(const Diagram& d);

// "a:Y:b; a:Y:b; ..." bottom to top. The domain is inferred from the first
// layer; an empty word needs `domain`.
Word parse_word(std::string_view text, std::optional<int> domain = std::nullopt);
std::string format_word(const Word& w);

// The relations of the presentation. Identity is the trivial I o I = I,
// which is a no-op here since identity layers are implicit.
enum class Rule { Identity, XX, Braid, AX, AU, Slide, Straighten };
inline constexpr Rule kAllRules[] = {Rule::Identity, Rule::XX,    Rule::Braid,     Rule::AX,
                                     Rule::AU,       Rule::Slide, Rule::Straighten};

// Which image of the base relation: the relation itself, its * or # image,
// or both applied.
enum class Transform { None, Star, Sharp, StarSharp };
inline constexpr Transform kAllTransforms[] = {Transform::None, Transform::Star, Transform::Sharp,
                                               Transform::StarSharp};

std::string rule_name(Rule r);
std::string transform_name(Transform t);

// One side of a relation: a word plus a delta power.
struct RelationSide {
  int delta_power = 0;
  Word word;
};

struct Relation {
  Rule rule;
  Transform transform;
  RelationSide lhs;
  RelationSide rhs;
};

// The relation on its minimal width, transformed.
Relation relation(Rule rule, Transform transform);

struct RelationInstance {
  Rule rule = Rule::Identity;
  Transform transform = Transform::None;
  // Index of the first replaced layer.
  std::size_t position = 0;
  // true: replace lhs by rhs; false: rhs by lhs.
  bool forward = true;
  // Identity strands to the left of the pattern.
  int pad_left = 0;
};

// Throws ValidationError when the pattern does not match.
ScaledWord apply_relation(const ScaledWord& w, const RelationInstance& inst);
bool is_applicable(const ScaledWord& w, const RelationInstance& inst);
std::vector<RelationInstance> applicable_instances(const ScaledWord& w);

struct RelationCheck {
  Rule rule;
  Transform transform;
  ScaledDiagram lhs;
  ScaledDiagram rhs;
  bool pass;
};

// Evaluates both sides of every relation and every transform.
std::vector<RelationCheck> verify_relation_soundness();

}  // namespace brauer
