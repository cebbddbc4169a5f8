//
// Copyright 2026 The paraug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "paraug/masking.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "gtest/gtest.h"
#include "paraug/mock_backend.h"
#include "paraug/status.h"

namespace paraug {
namespace {

constexpr char kFigure[] =
    "The court should provide financial assistance to the victim's family.";

std::vector<std::string> Originals(const std::vector<MaskSite>& sites) {
  std::vector<std::string> out;
  for (const MaskSite& s : sites) out.push_back(s.original_token);
  return out;
}

// Records fill-mask requests on the way to a mock.
class SpyBackend final : public InferenceBackend {
 public:
  explicit SpyBackend(MockBackend inner) : inner_(std::move(inner)) {}
  absl::StatusOr<BackendDescriptor> Describe() override { return inner_.Describe(); }
  absl::StatusOr<std::vector<MaskPrediction>> FillMask(const MaskRequest& r) override {
    requests.push_back(r);
    return inner_.FillMask(r);
  }
  absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) override {
    return inner_.Embed(texts);
  }
  absl::StatusOr<double> QeScore(std::string_view s, std::string_view t) override {
    return inner_.QeScore(s, t);
  }
  std::vector<MaskRequest> requests;

 private:
  MockBackend inner_;
};

class DownBackend final : public InferenceBackend {
 public:
  absl::StatusOr<BackendDescriptor> Describe() override {
    return BackendDescriptor{"down", "<mask>", 4, "", false};
  }
  absl::StatusOr<std::vector<MaskPrediction>> FillMask(const MaskRequest&) override {
    return MakeError(ErrorKind::kBackendUnavailable, "connection refused");
  }
  absl::StatusOr<std::vector<EmbeddingVector>> Embed(std::span<const std::string>) override {
    return MakeError(ErrorKind::kBackendUnavailable, "connection refused");
  }
  absl::StatusOr<double> QeScore(std::string_view, std::string_view) override {
    return MakeError(ErrorKind::kBackendUnavailable, "connection refused");
  }
};

TEST(EnumerateMaskSitesTest, AllStopWords) {
  StopwordSet stop("en", {"the", "to", "a"});
  EXPECT_TRUE(EnumerateMaskSites(Tokenize("The to a"), stop, 5).empty());
}

TEST(EnumerateMaskSitesTest, FigureSentenceFirstFive) {
  StopwordSet stop("en", {"the", "should", "to"});
  const std::vector<MaskSite> sites = EnumerateMaskSites(Tokenize(kFigure), stop, 5);
  EXPECT_EQ(Originals(sites), (std::vector<std::string>{
                                  "court", "provide", "financial", "assistance",
                                  "victim's"}));
  EXPECT_EQ(sites[0].token_index, 1u);
  EXPECT_EQ(sites[4].token_index, 8u);
  EXPECT_EQ(Originals(EnumerateMaskSites(Tokenize(kFigure), stop, 8)).back(), "family");
}

TEST(EnumerateMaskSitesTest, ZeroCap) {
  EXPECT_TRUE(EnumerateMaskSites(Tokenize(kFigure), StopwordSet(), 0).empty());
}

TEST(EnumerateMaskSitesTest, SkipsNumeralsAndPunctuation) {
  const std::vector<MaskSite> sites =
      EnumerateMaskSites(Tokenize("Pay 500 rupees , by 2024 !"), StopwordSet(), 10);
  EXPECT_EQ(Originals(sites), (std::vector<std::string>{"Pay", "rupees", "by"}));
}

TEST(EnumerateMaskSitesTest, StopWordsAreCaseInsensitive) {
  StopwordSet stop("en", {"THE"});
  EXPECT_EQ(Originals(EnumerateMaskSites(Tokenize("The the cat"), stop, 3)),
            (std::vector<std::string>{"cat"}));
}

TEST(GenerateVariantsAtTest, GovernmentBecomesCourt) {
  SpyBackend backend(MockBackend({{"government", {{"court", 0.6}, {"state", 0.2}}}}));
  const std::string segment =
      "The government should provide financial assistance to the victim's family.";
  absl::StatusOr<std::vector<GeneratedVariant>> v =
      GenerateVariantsAt(segment, {1, "government"}, 10, backend, "0", Side::kSource);
  ASSERT_TRUE(v.ok()) << v.status();
  ASSERT_EQ(v->size(), 2u);
  EXPECT_EQ((*v)[0].text, kFigure);
  EXPECT_EQ((*v)[0].replacement, "court");
  EXPECT_DOUBLE_EQ((*v)[0].model_prob, 0.6);
  EXPECT_FALSE((*v)[0].is_original);
  EXPECT_EQ((*v)[0].parent_pair_id, "0");
  EXPECT_EQ((*v)[0].site, (MaskSite{1, "government"}));

  ASSERT_EQ(backend.requests.size(), 1u);
  EXPECT_EQ(backend.requests[0].masked_text,
            "The [MASK] should provide financial assistance to the victim's family.");
  EXPECT_EQ(backend.requests[0].topk, 10);
}

TEST(GenerateVariantsAtTest, OnlyOriginalPredicted) {
  MockBackend backend({{"court", {{"Court", 0.9}, {"court", 0.1}}}});
  absl::StatusOr<std::vector<GeneratedVariant>> v =
      GenerateVariantsAt(kFigure, {1, "court"}, 10, backend);
  ASSERT_TRUE(v.ok());
  EXPECT_TRUE(v->empty());
}

TEST(GenerateVariantsAtTest, TopkCapsVariants) {
  std::vector<MaskPrediction> many;
  for (int i = 0; i < 15; ++i) many.push_back({"w" + std::to_string(i), 0.01 * i});
  MockBackend backend({{"court", many}});
  absl::StatusOr<std::vector<GeneratedVariant>> v =
      GenerateVariantsAt(kFigure, {1, "court"}, 10, backend);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v->size(), 10u);
  EXPECT_EQ(v->front().replacement, "w14");
}

TEST(GenerateVariantsAtTest, DropsNonWordPredictions) {
  MockBackend backend({{"court", {{"high court", 0.9},
                                  {"court,", 0.8},
                                  {"...", 0.7},
                                  {"[MASK]", 0.6},
                                  {"-bench", 0.5},
                                  {"tribunal", 0.4},
                                  {"judge's", 0.3}}}});
  absl::StatusOr<std::vector<GeneratedVariant>> v =
      GenerateVariantsAt(kFigure, {1, "court"}, 10, backend);
  ASSERT_TRUE(v.ok());
  ASSERT_EQ(v->size(), 2u);
  EXPECT_EQ((*v)[0].replacement, "tribunal");
  EXPECT_EQ((*v)[1].replacement, "judge's");
}

TEST(GenerateVariantsAtTest, TiesBreakByReplacement) {
  MockBackend backend({{"court", {{"zeta", 0.5}, {"alpha", 0.5}, {"mid", 0.7}}}});
  absl::StatusOr<std::vector<GeneratedVariant>> v =
      GenerateVariantsAt(kFigure, {1, "court"}, 10, backend);
  ASSERT_TRUE(v.ok());
  ASSERT_EQ(v->size(), 3u);
  EXPECT_EQ((*v)[0].replacement, "mid");
  EXPECT_EQ((*v)[1].replacement, "alpha");
  EXPECT_EQ((*v)[2].replacement, "zeta");
}

TEST(GenerateVariantsAtTest, SiteMustMatchSegment) {
  MockBackend backend;
  EXPECT_TRUE(IsKind(GenerateVariantsAt(kFigure, {1, "judge"}, 10, backend).status(),
                     ErrorKind::kInvariantViolation));
  EXPECT_TRUE(IsKind(GenerateVariantsAt(kFigure, {10, "."}, 10, backend).status(),
                     ErrorKind::kInvariantViolation));
  EXPECT_TRUE(IsKind(GenerateVariantsAt(kFigure, {99, "x"}, 10, backend).status(),
                     ErrorKind::kInvariantViolation));
}

TEST(GenerateVariantsAtTest, SegmentAlreadyContainingSentinel) {
  MockBackend backend({{"court", {{"judge", 0.5}}}});
  absl::StatusOr<std::vector<GeneratedVariant>> v =
      GenerateVariantsAt("The court [MASK] rules", {1, "court"}, 10, backend);
  EXPECT_TRUE(IsKind(v.status(), ErrorKind::kMalformedMaskInput));
}

TEST(GenerateVariantsAtTest, BackendErrorCarriesSiteContext) {
  DownBackend backend;
  absl::StatusOr<std::vector<GeneratedVariant>> v =
      GenerateVariantsAt(kFigure, {1, "court"}, 10, backend);
  EXPECT_TRUE(IsKind(v.status(), ErrorKind::kBackendUnavailable));
  EXPECT_NE(std::string(v.status().message()).find("'court'"), std::string::npos);
}

TEST(GenerateAllVariantsTest, FiveSitesTimesTopkTen) {
  MockBackend::SubstitutionTable table;
  for (const char* word : {"court", "provide", "financial", "assistance", "family"}) {
    for (int i = 0; i < 10; ++i) {
      table[word].push_back({std::string(word) + "x" + std::to_string(i), 0.5 - 0.01 * i});
    }
  }
  MockBackend backend(table);
  StopwordSet stop("en", {"the", "should", "to", "victim's"});
  absl::StatusOr<std::vector<GeneratedVariant>> v = GenerateAllVariants(
      kFigure, "0", Side::kSource, {10, 5, 100}, stop, backend);
  ASSERT_TRUE(v.ok()) << v.status();
  ASSERT_EQ(v->size(), 51u);
  EXPECT_TRUE(v->front().is_original);
  EXPECT_EQ(v->front().text, kFigure);
  EXPECT_EQ(std::count_if(v->begin(), v->end(),
                          [](const GeneratedVariant& g) { return !g.is_original; }),
            50);
  // Generation order: sites left to right.
  EXPECT_EQ((*v)[1].replacement, "courtx0");
  EXPECT_EQ((*v)[11].replacement, "providex0");
}

TEST(GenerateAllVariantsTest, NoSitesGivesOnlyOriginal) {
  MockBackend backend({{"the", {{"a", 0.5}}}});
  StopwordSet stop("en", {"the", "to"});
  absl::StatusOr<std::vector<GeneratedVariant>> v =
      GenerateAllVariants("the to 42 .", "3", Side::kTarget, {}, stop, backend);
  ASSERT_TRUE(v.ok());
  ASSERT_EQ(v->size(), 1u);
  EXPECT_TRUE((*v)[0].is_original);
  EXPECT_EQ((*v)[0].side, Side::kTarget);
  EXPECT_EQ((*v)[0].parent_pair_id, "3");
}

TEST(GenerateAllVariantsTest, CollidingPredictionsKeepHighestProb) {
  // "café" composed and decomposed normalize to the same text.
  MockBackend backend({{"bar", {{"caf\xc3\xa9", 0.2}, {"cafe\xcc\x81", 0.4},
                                {"pub", 0.3}, {"pub", 0.1}}}});
  absl::StatusOr<std::vector<GeneratedVariant>> v =
      GenerateAllVariants("the bar opens", "0", Side::kSource, {}, StopwordSet(), backend);
  ASSERT_TRUE(v.ok());
  std::set<std::string> texts;
  for (const GeneratedVariant& g : *v) texts.insert(g.text);
  EXPECT_EQ(texts.size(), v->size());
  ASSERT_EQ(v->size(), 3u);
  EXPECT_EQ((*v)[1].text, "the caf\xc3\xa9 opens");
  EXPECT_DOUBLE_EQ((*v)[1].model_prob, 0.4);
  EXPECT_EQ((*v)[2].replacement, "pub");
  EXPECT_DOUBLE_EQ((*v)[2].model_prob, 0.3);
}

TEST(GenerateAllVariantsTest, CapKeepsMostProbableInGenerationOrder) {
  MockBackend backend({{"red", {{"blue", 0.1}, {"green", 0.9}}},
                       {"car", {{"bus", 0.5}, {"van", 0.05}}},
                       {"fast", {{"slow", 0.7}}}});
  absl::StatusOr<std::vector<GeneratedVariant>> v = GenerateAllVariants(
      "red car fast", "0", Side::kSource, {10, 8, 4}, StopwordSet(), backend);
  ASSERT_TRUE(v.ok());
  std::vector<std::string> replacements;
  for (const GeneratedVariant& g : *v) replacements.push_back(g.replacement);
  EXPECT_EQ(replacements, (std::vector<std::string>{"", "green", "bus", "slow"}));
}

TEST(GenerateAllVariantsTest, Deterministic) {
  MockBackend backend({{"red", {{"blue", 0.1}, {"green", 0.9}}},
                       {"car", {{"bus", 0.5}}}});
  auto a = GenerateAllVariants("red car", "0", Side::kSource, {}, StopwordSet(), backend);
  auto b = GenerateAllVariants("red car", "0", Side::kSource, {}, StopwordSet(), backend);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(*a, *b);
}

}  // namespace
}  // namespace paraug
