#include <gtest/gtest.h>

#include <random>

#include "brauer/error.hpp"
#include "brauer/word.hpp"

using namespace brauer;

namespace {

Word random_word(std::mt19937& rng, int max_domain, int max_length) {
  Word w;
  w.domain = std::uniform_int_distribution<int>(0, max_domain)(rng);
  const int length = std::uniform_int_distribution<int>(0, max_length)(rng);
  int width = w.domain;
  for (int i = 0; i < length; ++i) {
    std::vector<Generator> options{Generator::U};
    if (width >= 2) {
      options.push_back(Generator::X);
      options.push_back(Generator::X);
      options.push_back(Generator::A);
    }
    Layer layer;
    layer.generator = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    if (layer.generator == Generator::U && width >= 7) layer.generator = Generator::A;
    const int free = width - (layer.generator == Generator::U ? 0 : 2);
    layer.left = std::uniform_int_distribution<int>(0, free)(rng);
    layer.right = free - layer.left;
    width = layer.output_width();
    w.layers.push_back(layer);
  }
  return w;
}

}  // namespace

TEST(Word, EvaluateExamples) {
  EXPECT_EQ(evaluate_word(parse_word("0:U:0; 0:A:0")), (ScaledDiagram{1, Diagram()}));
  EXPECT_EQ(evaluate_word(parse_word("1:U:0; 0:A:1")), (ScaledDiagram{0, identity(1)}));
  EXPECT_EQ(evaluate_word(parse_word("", 3)), (ScaledDiagram{0, identity(3)}));
  EXPECT_EQ(evaluate_word(parse_word("0:X:0; 0:X:0")), (ScaledDiagram{0, identity(2)}));
  EXPECT_EQ(evaluate_word(parse_word("0:A:0; 0:U:0")), (ScaledDiagram{0, e_i(2, 1)}));
}

TEST(Word, ParseAndFormat) {
  const Word w = parse_word(" 1:X:0 ;0:A:1; 0:U:1 ");
  EXPECT_EQ(w.domain, 3);
  EXPECT_EQ(w.codomain(), 3);
  EXPECT_EQ(format_word(w), "1:X:0; 0:A:1; 0:U:1");
  EXPECT_EQ(parse_word(format_word(w)), w);
  EXPECT_THROW(parse_word("0:Q:0"), ValidationError);
  EXPECT_THROW(parse_word("0:X"), ValidationError);
  EXPECT_THROW(parse_word(""), ValidationError);
  EXPECT_THROW(parse_word("0:X:0; 0:X:1"), ValencyError);
}

TEST(Word, SynthesizeExamples) {
  const Word e = synthesize_word(e_i(2, 1));
  ASSERT_EQ(e.layers.size(), 2u);
  EXPECT_EQ(e.layers[0].generator, Generator::A);
  EXPECT_EQ(e.layers[1].generator, Generator::U);
  EXPECT_TRUE(synthesize_word(identity(4)).layers.empty());
  const Word s = synthesize_word(s_i(2, 1));
  ASSERT_EQ(s.layers.size(), 1u);
  EXPECT_EQ(s.layers[0].generator, Generator::X);
}

TEST(Word, RoundTripSmall) {
  for (int n = 0; n <= 6; n += 2) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& d : enumerate_diagrams(k, n - k)) {
        const Word w = synthesize_word(d);
        EXPECT_EQ(w.domain, k);
        EXPECT_EQ(evaluate_word(w), (ScaledDiagram{0, d})) << d.to_string();
      }
    }
  }
}

TEST(Relations, AllSound) {
  const auto checks = verify_relation_soundness();
  EXPECT_EQ(checks.size(), std::size(kAllRules) * 4);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.pass) << rule_name(c.rule) << " " << transform_name(c.transform);
  }
}

TEST(Relations, ApplyExamples) {
  // Braid.
  ScaledWord w{0, parse_word("0:X:1; 1:X:0; 0:X:1")};
  RelationInstance braid{Rule::Braid, Transform::None, 0, true, 0};
  ASSERT_TRUE(is_applicable(w, braid));
  const ScaledWord b = apply_relation(w, braid);
  EXPECT_EQ(format_word(b.word), "1:X:0; 0:X:1; 1:X:0");
  EXPECT_EQ(evaluate_word(b), evaluate_word(w));

  // A o X -> A.
  w = ScaledWord{0, parse_word("0:X:0; 0:A:0")};
  const ScaledWord a = apply_relation(w, {Rule::AX, Transform::None, 0, true, 0});
  EXPECT_EQ(format_word(a.word), "0:A:0");

  // Sliding.
  w = ScaledWord{0, parse_word("1:X:0; 0:A:1")};
  const ScaledWord s = apply_relation(w, {Rule::Slide, Transform::None, 0, true, 0});
  EXPECT_EQ(format_word(s.word), "0:X:1; 1:A:0");
  EXPECT_EQ(evaluate_word(s), evaluate_word(w));

  // A o U = delta moves a loop into the scalar.
  w = ScaledWord{0, parse_word("1:U:0; 1:A:0")};
  const ScaledWord l = apply_relation(w, {Rule::AU, Transform::None, 0, true, 1});
  EXPECT_EQ(l.delta_power, 1);
  EXPECT_TRUE(l.word.layers.empty());
  EXPECT_EQ(l.word.domain, 1);
  const ScaledWord back = apply_relation(l, {Rule::AU, Transform::None, 0, false, 0});
  EXPECT_EQ(evaluate_word(back), evaluate_word(w));

  EXPECT_THROW(apply_relation(w, {Rule::Braid, Transform::None, 0, true, 0}), ValidationError);
}

TEST(Relations, RandomRewritesAreSound) {
  std::mt19937 rng(2024);
  int rewrites = 0;
  for (int t = 0; t < 1000; ++t) {
    ScaledWord w{0, random_word(rng, 5, 12)};
    const ScaledDiagram value = evaluate_word(w);
    const auto inst = applicable_instances(w);
    if (inst.empty()) continue;
    const auto& pick = inst[std::uniform_int_distribution<std::size_t>(0, inst.size() - 1)(rng)];
    const ScaledWord next = apply_relation(w, pick);
    ++rewrites;
    ASSERT_EQ(evaluate_word(next), value)
        << format_word(w.word) << " via " << rule_name(pick.rule) << " " << transform_name(pick.transform);
  }
  EXPECT_GT(rewrites, 900);
}

TEST(Relations, RandomWalksKeepTheDiagram) {
  std::mt19937 rng(77);
  const auto pool = enumerate_diagrams(3, 3);
  for (int t = 0; t < 100; ++t) {
    const Diagram d = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    ScaledWord w{0, synthesize_word(d)};
    for (int step = 0; step < 20; ++step) {
      const auto inst = applicable_instances(w);
      if (inst.empty()) break;
      w = apply_relation(w, inst[std::uniform_int_distribution<std::size_t>(0, inst.size() - 1)(rng)]);
      ASSERT_EQ(evaluate_word(w), (ScaledDiagram{0, d}));
    }
  }
}
