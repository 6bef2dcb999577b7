#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "opacity/aut_format.hpp"
#include "opacity/corpus.hpp"
#include "opacity/error.hpp"

namespace {

using namespace opacity;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(Corpus, NineEntriesInOrder) {
  std::vector<std::string> names;
  for (const auto& e : corpus::entries()) names.push_back(e.name);
  EXPECT_EQ(names, (std::vector<std::string>{"one_state", "identity2", "thue_morse",
                                             "period_doubling", "golay_shapiro",
                                             "paperfolding", "baum_sweet", "hanoi",
                                             "ternary_digit_sum"}));
}

TEST(Corpus, ExpectedValuesAreConsistent) {
  for (const auto& e : corpus::entries()) {
    EXPECT_EQ(e.expected_complexity, e.expected_opacity.doubled()) << e.name;
    const bool transparent = e.expected_opacity.is_zero();
    EXPECT_EQ(transparent, e.expected_classification == Classification::Transparent) << e.name;
    EXPECT_EQ(e.expected_opacity == DyadicDistance::pow2inv(1),
              e.expected_classification == Classification::Opaque)
        << e.name;
    if (e.expected_witness_length) {
      EXPECT_EQ(DyadicDistance::pow2inv(*e.expected_witness_length - 1), e.expected_opacity)
          << e.name;
    }
  }
}

TEST(Corpus, FilesMatchBuilders) {
  for (const auto& e : corpus::entries()) {
    const std::string path = std::string(OPACITY_CORPUS_DIR) + "/" + e.name + ".aut";
    const std::string text = slurp(path);
    EXPECT_EQ(text, serialize(e.build())) << path;
    const Validated v = read_aut_file(path);
    EXPECT_TRUE(v.pruned_states.empty());
    EXPECT_EQ(v.dfao, e.build()) << path;
  }
}

TEST(Corpus, SequencesMatchRecurrences) {
  for (const auto& e : corpus::entries()) {
    if (!corpus::has_recurrence(e.name)) continue;
    EXPECT_TRUE(corpus::sequence_checks(e.name, 1000)) << e.name;
  }
}

TEST(Corpus, ReferenceTermsSpotChecks) {
  using Terms = std::vector<std::optional<std::string>>;
  EXPECT_EQ(corpus::reference_terms("thue_morse", 6), (Terms{"0", "1", "1", "0", "1", "0"}));
  EXPECT_EQ(corpus::reference_terms("golay_shapiro", 8),
            (Terms{"1", "1", "1", "-1", "1", "1", "-1", "1"}));
  EXPECT_EQ(corpus::reference_terms("paperfolding", 7),
            (Terms{std::nullopt, "1", "1", "-1", "1", "1", "-1"}));
  EXPECT_EQ(corpus::reference_terms("baum_sweet", 8),
            (Terms{"1", "1", "0", "1", "1", "0", "0", "1"}));
  EXPECT_EQ(corpus::reference_terms("ternary_digit_sum", 6),
            (Terms{"0", "1", "2", "1", "2", "0"}));
}

TEST(Corpus, OneStateForEveryRadix) {
  for (Digit k = 2; k <= 5; ++k) {
    const Dfao d = corpus::one_state(k);
    EXPECT_EQ(d.radix(), k);
    EXPECT_EQ(d.state_count(), 1u);
  }
}

TEST(Corpus, Errors) {
  try {
    corpus::build("no_such_sequence");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownCorpusName);
  }
  EXPECT_FALSE(corpus::has_recurrence("hanoi"));
  try {
    corpus::reference_terms("hanoi", 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoRecurrence);
  }
}

}  // namespace
