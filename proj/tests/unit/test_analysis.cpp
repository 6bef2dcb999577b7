#include <gtest/gtest.h>

#include <stdexcept>

#include "opacity/analysis.hpp"
#include "opacity/corpus.hpp"
#include "opacity/minimization.hpp"
#include "random_automata.hpp"

namespace {

using namespace opacity;
namespace tst = opacity::testing;

StateIndex idx(const Automaton& a, const char* name) { return a.find(name); }

std::vector<std::string> inhomogeneous_names(const Automaton& a) {
  std::vector<std::string> names;
  const auto verdicts = state_homogeneity(a);
  for (StateIndex s = 0; s < a.state_count(); ++s) {
    if (!verdicts[s].homogeneous) names.push_back(a.name(s));
  }
  return names;
}

// First inhomogeneous word in length-lexicographic order, by exhaustive search.
std::optional<Word> exhaustive_witness(const Automaton& a, std::size_t max_len) {
  std::optional<Word> found;
  tst::for_each_word(a.radix(), 1, max_len, [&](const Word& w) {
    if (!found && !tst::path_is_homogeneous(a, w)) found = w;
  });
  return found;
}

// -- Opacity value type -------------------------------------------------------------

TEST(Opacity, Values) {
  EXPECT_TRUE(Opacity::transparent().value().is_zero());
  EXPECT_TRUE(Opacity::transparent().complexity().is_zero());
  EXPECT_EQ(Opacity::from_path_length(2).value(), DyadicDistance::pow2inv(1));
  EXPECT_EQ(Opacity::from_path_length(2).complexity(), DyadicDistance::pow2inv(0));
  EXPECT_EQ(Opacity::from_path_length(5).value(), DyadicDistance::pow2inv(4));
  EXPECT_EQ(Opacity::from_path_length(5).complexity(), DyadicDistance::pow2inv(3));
  EXPECT_TRUE(Opacity::from_path_length(2).is_opaque());
  EXPECT_FALSE(Opacity::from_path_length(3).is_opaque());
  EXPECT_THROW(Opacity::from_path_length(1), std::invalid_argument);
  EXPECT_EQ(max_opacity(), DyadicDistance::pow2inv(1));
}

TEST(Classification, Names) {
  EXPECT_EQ(to_string(Classification::Transparent), "TRANSPARENT");
  EXPECT_EQ(to_string(Classification::Opaque), "OPAQUE");
  EXPECT_EQ(to_string(Classification::Intermediate), "INTERMEDIATE");
}

// -- Homogeneity ----------------------------------------------------------------------

TEST(Homogeneity, GolayShapiroAllHomogeneous) {
  const Automaton a = corpus::golay_shapiro().automaton();
  const auto v = state_homogeneity(a);
  EXPECT_EQ(v[idx(a, "A")], (StateVerdict{true, 0}));
  EXPECT_EQ(v[idx(a, "B")], (StateVerdict{true, 1}));
  EXPECT_EQ(v[idx(a, "C")], (StateVerdict{true, 1}));
  EXPECT_EQ(v[idx(a, "D")], (StateVerdict{true, 0}));
}

TEST(Homogeneity, PeriodDoubling) {
  const Automaton a = corpus::period_doubling().automaton();
  const auto v = state_homogeneity(a);
  EXPECT_EQ(v[idx(a, "A")], (StateVerdict{false, std::nullopt}));
  EXPECT_EQ(v[idx(a, "B")], (StateVerdict{true, 1}));
}

TEST(Homogeneity, Hanoi) {
  EXPECT_EQ(inhomogeneous_names(corpus::hanoi().automaton()),
            (std::vector<std::string>{"A", "C", "E"}));
}

TEST(Homogeneity, WholeAutomaton) {
  EXPECT_TRUE(is_homogeneous_automaton(corpus::paperfolding().automaton()));
  EXPECT_TRUE(is_homogeneous_automaton(corpus::identity2().automaton()));
  EXPECT_FALSE(is_homogeneous_automaton(corpus::thue_morse().automaton()));
  EXPECT_FALSE(is_homogeneous_automaton(corpus::ternary_digit_sum().automaton()));
}

// -- Distances ------------------------------------------------------------------------

TEST(Distances, Examples) {
  const Automaton pd = corpus::period_doubling().automaton();
  EXPECT_EQ(entry_distance(pd, idx(pd, "A"), 0), 1u);
  EXPECT_EQ(entry_distance(pd, idx(pd, "A"), 1), 2u);
  EXPECT_EQ(entry_distance(pd, idx(pd, "B"), 0), std::nullopt);
  EXPECT_EQ(return_distance(pd, idx(pd, "A"), 1), 2u);
  EXPECT_EQ(return_distance(pd, idx(pd, "A"), 0), 1u);

  const Automaton tm = corpus::thue_morse().automaton();
  EXPECT_EQ(entry_distance(tm, idx(tm, "B"), 0), 2u);
  EXPECT_EQ(return_distance(tm, idx(tm, "B"), 0), 1u);

  const Automaton bs = corpus::baum_sweet().automaton();
  EXPECT_EQ(return_distance(bs, idx(bs, "B"), 0), 2u);
  EXPECT_EQ(return_distance(bs, idx(bs, "A"), 1), std::nullopt);
}

TEST(Distances, AgreeWithExhaustiveSearch) {
  tst::Rng rng(41);
  for (int i = 0; i < 120; ++i) {
    const Automaton a = tst::random_automaton(rng, 5, {2, 3});
    const std::size_t max_len = a.state_count() + 1;
    for (StateIndex s = 0; s < a.state_count(); ++s) {
      for (Digit d = 0; d < a.radix(); ++d) {
        EXPECT_EQ(entry_distance(a, s, d),
                  tst::exhaustive_last_edge_distance(a, a.initial(), s, d, max_len));
        EXPECT_EQ(return_distance(a, s, d),
                  tst::exhaustive_last_edge_distance(a, s, s, d, max_len));
      }
    }
  }
}

// -- Shortest inhomogeneous path ----------------------------------------------------------

TEST(Witness, ThueMorse) {
  const Automaton a = corpus::thue_morse().automaton();
  const auto w = shortest_inhomogeneous_path(a);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->word, (Word{1, 0}));
  EXPECT_EQ(w->collide_state, idx(a, "B"));
  EXPECT_EQ(w->position_a, 0u);
  EXPECT_EQ(w->position_b, 1u);
}

TEST(Witness, PeriodDoubling) {
  const Automaton a = corpus::period_doubling().automaton();
  const auto w = shortest_inhomogeneous_path(a);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->word, (Word{0, 1, 1}));
  EXPECT_EQ(w->collide_state, idx(a, "A"));
  EXPECT_EQ(w->position_a, 0u);
  EXPECT_EQ(w->position_b, 2u);
}

TEST(Witness, HomogeneousHasNone) {
  EXPECT_FALSE(shortest_inhomogeneous_path(corpus::golay_shapiro().automaton()));
  EXPECT_FALSE(shortest_inhomogeneous_path(corpus::paperfolding().automaton()));
  EXPECT_FALSE(shortest_inhomogeneous_path(corpus::identity2().automaton()));
}

TEST(Witness, MatchesExhaustiveSearch) {
  tst::Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    const Automaton a = tst::random_automaton(rng, 5, {2, 3});
    const auto w = shortest_inhomogeneous_path(a);
    const auto expected = exhaustive_witness(a, 2 * a.state_count());
    ASSERT_EQ(w.has_value(), expected.has_value());
    if (!w) continue;
    EXPECT_EQ(w->word, *expected);
    EXPECT_LE(w->word.size(), 2 * a.state_count());
    const PathRun run = run_path(a, w->word);
    const Edge& ea = run.edges[w->position_a];
    const Edge& eb = run.edges[w->position_b];
    EXPECT_EQ(w->position_b + 1, w->word.size());
    EXPECT_LT(w->position_a, w->position_b);
    EXPECT_EQ(ea.target, w->collide_state);
    EXPECT_EQ(eb.target, w->collide_state);
    EXPECT_NE(ea.digit, eb.digit);
  }
}

TEST(Witness, NoneMeansNoInhomogeneousWordUpToBound) {
  tst::Rng rng(44);
  int transparent = 0;
  for (int i = 0; i < 400 && transparent < 30; ++i) {
    const Automaton a = tst::random_automaton(rng, 4, {2});
    if (shortest_inhomogeneous_path(a)) continue;
    ++transparent;
    EXPECT_FALSE(exhaustive_witness(a, 2 * a.state_count() + 2));
  }
  EXPECT_GT(transparent, 0);
}

// -- Opacity --------------------------------------------------------------------------

TEST(ComputeOpacity, Corpus) {
  EXPECT_EQ(compute_opacity(corpus::thue_morse().automaton()).value(),
            DyadicDistance::pow2inv(1));
  EXPECT_EQ(compute_opacity(corpus::period_doubling().automaton()).value(),
            DyadicDistance::pow2inv(2));
  EXPECT_TRUE(compute_opacity(corpus::golay_shapiro().automaton()).is_transparent());
  for (Digit k = 2; k <= 5; ++k) {
    EXPECT_EQ(compute_opacity(corpus::one_state(k).automaton()).value(), max_opacity());
  }
}

TEST(IsOpaqueQuick, Examples) {
  EXPECT_TRUE(is_opaque_quick(corpus::thue_morse().automaton()));
  EXPECT_FALSE(is_opaque_quick(corpus::period_doubling().automaton()));
  EXPECT_TRUE(is_opaque_quick(corpus::one_state(3).automaton()));
}

TEST(IsOpaqueQuick, AgreesWithFullComputation) {
  tst::Rng rng(47);
  for (int i = 0; i < 500; ++i) {
    const Automaton a = tst::random_automaton(rng, 6, {2, 3, 4});
    EXPECT_EQ(is_opaque_quick(a), compute_opacity(a).is_opaque());
  }
}

// -- Longest homogeneous prefix ------------------------------------------------------------

TEST(LongestHomogeneousPrefix, Examples) {
  const Automaton pd = corpus::period_doubling().automaton();
  EXPECT_EQ(longest_homogeneous_prefix(pd, Word{0, 1, 1}), 2u);
  EXPECT_EQ(longest_homogeneous_prefix(pd, Word{0, 1, 1, 0, 0}), 2u);
  EXPECT_EQ(longest_homogeneous_prefix(pd, Word{}), 0u);
  const Automaton tm = corpus::thue_morse().automaton();
  EXPECT_EQ(longest_homogeneous_prefix(tm, Word{1, 0}), 1u);
  const Automaton gs = corpus::golay_shapiro().automaton();
  EXPECT_EQ(longest_homogeneous_prefix(gs, Word{1, 1, 0, 1, 0, 0}), 6u);
}

TEST(LongestHomogeneousPrefix, MatchesPrefixScan) {
  tst::Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const Automaton a = tst::random_automaton(rng, 5, {2, 3});
    tst::for_each_word(a.radix(), 0, 6, [&](const Word& w) {
      std::size_t h = 0;
      while (h < w.size() &&
             tst::path_is_homogeneous(a, Word(w.begin(), w.begin() + static_cast<long>(h + 1)))) {
        ++h;
      }
      EXPECT_EQ(longest_homogeneous_prefix(a, w), h);
    });
  }
}

// -- Sequences ------------------------------------------------------------------------------

TEST(AnalyzeSequence, CorpusExpectations) {
  for (const auto& e : corpus::entries()) {
    const AnalysisReport r = analyze_sequence(e.build());
    EXPECT_EQ(r.opacity.value(), e.expected_opacity) << e.name;
    EXPECT_EQ(r.complexity, e.expected_complexity) << e.name;
    EXPECT_EQ(r.classification, e.expected_classification) << e.name;
    EXPECT_EQ(r.states_count, e.expected_states) << e.name;
    if (e.expected_witness_length) {
      ASSERT_TRUE(r.witness) << e.name;
      EXPECT_EQ(r.witness->word.size(), *e.expected_witness_length) << e.name;
    }
  }
}

TEST(AnalyzeSequence, HanoiWitness) {
  const AnalysisReport r = analyze_sequence(corpus::hanoi());
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->word, (Word{0, 1, 1}));
  EXPECT_EQ(inhomogeneous_names(r.intrinsic.automaton()),
            (std::vector<std::string>{"A", "C", "D"}));
  EXPECT_TRUE(r.strictly_accessible);
}

TEST(AnalyzeSequence, BaumSweetIsNotStrictlyAccessible) {
  const AnalysisReport r = analyze_sequence(corpus::baum_sweet());
  EXPECT_FALSE(r.strictly_accessible);
  EXPECT_EQ(r.input_states, 4u);
}

TEST(AnalyzeSequence, InvariantUnderEquivalentPresentations) {
  tst::Rng rng(59);
  for (int i = 0; i < 200; ++i) {
    const Dfao d = tst::random_dfao(rng, 5, i % 2 == 0 ? 2 : 3, 2);
    const Dfao split = tst::split_state(d, 0, rng);
    const AnalysisReport a = analyze_sequence(d);
    const AnalysisReport b = analyze_sequence(split);
    EXPECT_EQ(a.opacity, b.opacity);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.intrinsic, b.intrinsic);
  }
}

TEST(AnalyzeSequence, ReportsTheIntrinsicAutomaton) {
  tst::Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    const Dfao d = tst::random_dfao(rng, 6, 2, 3);
    const AnalysisReport r = analyze_sequence(d);
    EXPECT_EQ(r.intrinsic, intrinsic_automaton(d).target);
    EXPECT_EQ(r.opacity, compute_opacity(r.intrinsic.automaton()));
    EXPECT_EQ(r.state_homogeneity, state_homogeneity(r.intrinsic.automaton()));
  }
}

}  // namespace
