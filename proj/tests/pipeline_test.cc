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

#include "paraug/pipeline.h"

#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracle/brute_force.h"
#include "paraug/mock_backend.h"
#include "paraug/status.h"

namespace paraug {
namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

ParallelCorpus Corpus(const Rows& rows) {
  ParallelCorpus c;
  c.lang_source = "en";
  c.lang_target = "hi";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    c.pairs.push_back({std::to_string(i), rows[i].first, rows[i].second, Origin::Seed(), {}});
  }
  return c;
}

MockBackend::SubstitutionTable ToTable(const oracle::Table& table) {
  MockBackend::SubstitutionTable out;
  for (const auto& [word, preds] : table) {
    for (const auto& [token, prob] : preds) out[word].push_back({token, prob});
  }
  return out;
}

// Fails fill-mask for any text containing "BOOM".
class FlakyBackend final : public InferenceBackend {
 public:
  explicit FlakyBackend(MockBackend inner) : inner_(std::move(inner)) {}
  absl::StatusOr<BackendDescriptor> Describe() override { return inner_.Describe(); }
  absl::StatusOr<std::vector<MaskPrediction>> FillMask(const MaskRequest& r) override {
    if (r.masked_text.find("BOOM") != std::string::npos) {
      return MakeError(ErrorKind::kBackend, "model crashed");
    }
    return inner_.FillMask(r);
  }
  absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) override {
    return inner_.Embed(texts);
  }
  absl::StatusOr<double> QeScore(std::string_view s, std::string_view t) override {
    if (s.find("BOOM") != std::string_view::npos) {
      return MakeError(ErrorKind::kBackendUnavailable, "qe down");
    }
    return inner_.QeScore(s, t);
  }

 private:
  MockBackend inner_;
};

void ExpectMatchesOracle(const RunResult& got, const std::vector<oracle::Emitted>& want) {
  ASSERT_EQ(got.corpus.pairs.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    const SegmentPair& p = got.corpus.pairs[i];
    EXPECT_EQ(p.source_text, want[i].src) << i;
    EXPECT_EQ(p.target_text, want[i].tgt) << i;
    ASSERT_TRUE(p.scores.has_value());
    EXPECT_NEAR(p.scores->similarity, want[i].similarity, 1e-9);
    EXPECT_EQ(p.scores->cooc.has_value(), want[i].cooc.has_value());
    if (want[i].cooc) EXPECT_NEAR(*p.scores->cooc, *want[i].cooc, 1e-9);
    EXPECT_EQ(p.scores->qe.has_value(), want[i].qe.has_value());
    if (want[i].qe) EXPECT_NEAR(*p.scores->qe, *want[i].qe, 1e-9);
  }
}

TEST(PipelineTest, TwoByTwoMatchesOracle) {
  const Rows rows{{"the court rules", "adalat court rules"}};
  const oracle::Table table{{"court", {{"judge", 0.6}}}, {"rules", {{"decides", 0.5}}},
                            {"adalat", {{"nyayalay", 0.4}}}};
  PipelineConfig config;
  config.threshold = 0.3;
  config.max_sites = 1;
  config.cooc_check = true;
  config.cooc_min_score = -10.0;
  config.qe_check = true;
  config.qe_threshold = 0.1;
  StopwordSet stop("en", {"the"});
  MockBackend backend(ToTable(table));
  absl::StatusOr<RunResult> got = Augmenter(config, backend, stop, {}).Run(Corpus(rows));
  ASSERT_TRUE(got.ok()) << got.status();

  oracle::Config cfg;
  cfg.threshold = 0.3;
  cfg.max_sites = 1;
  cfg.cooc = true;
  cfg.cooc_min = -10.0;
  cfg.qe = true;
  cfg.qe_threshold = 0.1;
  std::vector<oracle::Emitted> want = oracle::Pipeline(rows, table, {"the"}, {}, cfg);
  ExpectMatchesOracle(*got, want);
  EXPECT_EQ(got->rounds[0].variants_src, 2u);
  EXPECT_EQ(got->rounds[0].variants_tgt, 2u);
  EXPECT_EQ(got->rounds[0].candidate_pairs, 3u);
}

TEST(PipelineTest, RandomConfigsMatchOracle) {
  std::mt19937 rng(21);
  const std::vector<std::string> vocab{"court", "judge", "fee", "help", "state", "law",
                                       "the", "a", "rules", "pays", "42"};
  oracle::Table table;
  for (const std::string& w : vocab) {
    for (int k = 0; k < 4; ++k) {
      table[w].push_back({vocab[rng() % vocab.size()], 0.05 * static_cast<double>(rng() % 20)});
    }
  }
  for (int trial = 0; trial < 15; ++trial) {
    Rows rows;
    for (int i = 0; i < 3; ++i) {
      std::string s, t;
      for (int k = 0; k < 4; ++k) s += (k ? " " : "") + vocab[rng() % vocab.size()];
      for (int k = 0; k < 3; ++k) t += (k ? " " : "") + vocab[rng() % vocab.size()];
      rows.push_back({s + ".", t});
    }
    oracle::Config cfg;
    cfg.threshold = 0.1 * static_cast<double>(rng() % 10);
    cfg.topk = 1 + static_cast<int>(rng() % 4);
    cfg.max_sites = 1 + rng() % 4;
    cfg.max_variants = 2 + rng() % 8;
    cfg.cooc = rng() % 2 == 0;
    cfg.cooc_min = -1.0;
    cfg.qe = rng() % 2 == 0;
    cfg.qe_threshold = 0.3;

    PipelineConfig config;
    config.threshold = cfg.threshold;
    config.topk = cfg.topk;
    config.max_sites = cfg.max_sites;
    config.max_variants_per_side = cfg.max_variants;
    config.cooc_check = cfg.cooc;
    config.cooc_min_score = cfg.cooc_min;
    config.qe_check = cfg.qe;
    config.qe_threshold = cfg.qe_threshold;
    MockBackend backend(ToTable(table));
    StopwordSet stop("en", {"the", "a"});
    absl::StatusOr<RunResult> got = Augmenter(config, backend, stop, stop).Run(Corpus(rows));
    ASSERT_TRUE(got.ok()) << got.status();
    SCOPED_TRACE(trial);
    ExpectMatchesOracle(*got, oracle::Pipeline(rows, table, {"the", "a"}, {"the", "a"}, cfg));
    EXPECT_TRUE(got->rounds[0].FunnelHolds());
  }
}

TEST(PipelineTest, NoMaskableWords) {
  MockBackend backend({{"the", {{"a", 0.9}}}});
  StopwordSet stop("en", {"the", "of"});
  PipelineConfig config;
  config.threshold = -1.0;
  absl::StatusOr<RunResult> r =
      Augmenter(config, backend, stop, stop).Run(Corpus({{"the of", "of the"}}));
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->corpus.pairs.empty());
  EXPECT_EQ(r->rounds[0].candidate_pairs, 0u);
}

TEST(PipelineTest, EmptyTableEmitsNothing) {
  MockBackend backend;
  absl::StatusOr<RunResult> r =
      Augmenter(PipelineConfig(), backend).Run(Corpus({{"the court", "adalat"}, {"a", "b"}}));
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->corpus.pairs.empty());
  EXPECT_EQ(r->rounds[0].candidate_pairs, 0u);
  EXPECT_EQ(r->rounds[0].seed_pairs, 2u);
}

TEST(PipelineTest, OneRoundEqualsRunRound) {
  MockBackend backend({{"court", {{"judge", 0.5}, {"bench", 0.3}}}});
  PipelineConfig config;
  config.threshold = 0.2;
  ParallelCorpus seed = Corpus({{"the court rules", "court adalat"}, {"a court", "court"}});
  absl::StatusOr<RunResult> run = Augmenter(config, backend).Run(seed);
  absl::StatusOr<RoundResult> round = Augmenter(config, backend).RunRound(seed, 1);
  ASSERT_TRUE(run.ok() && round.ok());
  EXPECT_FALSE(run->corpus.pairs.empty());
  EXPECT_EQ(run->corpus.pairs, round->emitted.pairs);
  EXPECT_EQ(run->rounds[0].ToJson(), round->stats.ToJson());
}

TEST(PipelineTest, EmittedPairsCarryProvenance) {
  MockBackend backend({{"court", {{"judge", 0.5}}}});
  PipelineConfig config;
  config.threshold = 0.2;
  absl::StatusOr<RunResult> r =
      Augmenter(config, backend).Run(Corpus({{"the court rules", "court adalat"}}));
  ASSERT_TRUE(r.ok());
  ASSERT_FALSE(r->corpus.pairs.empty());
  for (std::size_t k = 0; k < r->corpus.pairs.size(); ++k) {
    const SegmentPair& p = r->corpus.pairs[k];
    EXPECT_EQ(p.id, "g1-" + std::to_string(k));
    EXPECT_EQ(p.origin, Origin::Generated(1));
    EXPECT_TRUE(ValidateCorpus(r->corpus).empty());
  }
  EXPECT_EQ(r->corpus.lang_source, "en");
}

TEST(PipelineTest, HospitalMedicalChainNeedsSecondRound) {
  MockBackend backend({{"court", {{"hospital", 0.7}}}, {"financial", {{"medical", 0.6}}}});
  StopwordSet stop("en", {"the", "should", "to", "me"});
  PipelineConfig config;
  config.threshold = 0.5;
  config.rounds = 2;
  const std::string chained = "The hospital should provide me medical assistance.";
  ParallelCorpus seed = Corpus({{"The court should provide me financial assistance.",
                                 "court financial assistance dena chahiye"}});
  absl::StatusOr<RunResult> r = Augmenter(config, backend, stop, {}).Run(seed);
  ASSERT_TRUE(r.ok()) << r.status();
  ASSERT_EQ(r->rounds.size(), 2u);
  std::set<std::string> round1, round2;
  for (const SegmentPair& p : r->corpus.pairs) {
    (p.origin.round == 1 ? round1 : round2).insert(p.source_text);
  }
  EXPECT_TRUE(round1.contains("The hospital should provide me financial assistance."));
  EXPECT_FALSE(round1.contains(chained));
  EXPECT_TRUE(round2.contains(chained));
  EXPECT_GT(r->rounds[1].emitted_after_dedup, 0u);

  std::set<std::string> keys;
  for (const SegmentPair& p : r->corpus.pairs) {
    EXPECT_TRUE(keys.insert(DedupIndex::Key(p.source_text, p.target_text)).second);
  }
  EXPECT_FALSE(keys.contains(DedupIndex::Key(seed.pairs[0].source_text,
                                             seed.pairs[0].target_text)));
}

TEST(PipelineTest, IncludeSeedPrependsSeed) {
  MockBackend backend({{"court", {{"judge", 0.5}}}});
  PipelineConfig config;
  config.threshold = 0.2;
  config.include_seed = true;
  ParallelCorpus seed = Corpus({{"the court rules", "court adalat"}});
  absl::StatusOr<RunResult> r = Augmenter(config, backend).Run(seed);
  ASSERT_TRUE(r.ok());
  ASSERT_GT(r->corpus.pairs.size(), 1u);
  EXPECT_EQ(r->corpus.pairs[0], seed.pairs[0]);
}

TEST(PipelineTest, RoundCapZeroEmitsNothing) {
  MockBackend backend({{"court", {{"judge", 0.5}}}});
  PipelineConfig config;
  config.threshold = 0.2;
  config.round_cap = 0;
  config.rounds = 2;
  absl::StatusOr<RunResult> r =
      Augmenter(config, backend).Run(Corpus({{"the court rules", "court adalat"}}));
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->corpus.pairs.empty());
}

TEST(PipelineTest, CapsLimitRound) {
  MockBackend backend({{"court", {{"judge", 0.5}, {"bench", 0.4}, {"tribunal", 0.3}}}});
  PipelineConfig config;
  config.threshold = -1.0;
  config.round_cap = 2;
  ParallelCorpus seed = Corpus({{"court", "court"}, {"a court", "court x"}});
  absl::StatusOr<RunResult> r = Augmenter(config, backend).Run(seed);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->corpus.pairs.size(), 2u);

  config.round_cap.reset();
  config.seed_cap = 1;
  r = Augmenter(config, backend).Run(seed);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->rounds[0].seed_pairs, 1u);
  for (const SegmentPair& p : r->corpus.pairs) EXPECT_EQ(p.source_text.find("a "), std::string::npos);
}

TEST(PipelineTest, FailingPairIsSkipped) {
  FlakyBackend backend(MockBackend({{"court", {{"judge", 0.5}}}}));
  PipelineConfig config;
  config.threshold = 0.2;
  absl::StatusOr<RunResult> r = Augmenter(config, backend).Run(
      Corpus({{"the court rules", "court adalat"}, {"BOOM court", "x"}, {"a court", "court"}}));
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->rounds[0].skipped_pairs, 1u);
  EXPECT_EQ(r->rounds[0].seed_pairs, 3u);
  ASSERT_EQ(r->skipped.size(), 1u);
  EXPECT_EQ(r->skipped[0].substr(0, 3), "1: ");
  EXPECT_FALSE(r->corpus.pairs.empty());
}

TEST(PipelineTest, TooManyFailuresAbort) {
  FlakyBackend backend(MockBackend({{"court", {{"judge", 0.5}}}}));
  PipelineConfig config;
  absl::StatusOr<RunResult> r = Augmenter(config, backend).Run(
      Corpus({{"BOOM court", "x"}, {"BOOM court again", "y"}, {"a court", "court"}}));
  EXPECT_TRUE(IsKind(r.status(), ErrorKind::kRunAborted));
  EXPECT_EQ(ExitCodeFor(r.status()), kExitAborted);
}

TEST(PipelineTest, InvalidConfig) {
  MockBackend backend;
  PipelineConfig config;
  config.topk = 0;
  EXPECT_TRUE(IsKind(Augmenter(config, backend).Run(Corpus({{"a", "b"}})).status(),
                     ErrorKind::kConfig));
  config = PipelineConfig();
  config.threshold = 1.5;
  EXPECT_TRUE(IsKind(config.Validate(), ErrorKind::kConfig));
  config = PipelineConfig();
  config.workers = 0;
  EXPECT_TRUE(IsKind(config.Validate(), ErrorKind::kConfig));
  EXPECT_TRUE(PipelineConfig().Validate().ok());
}

TEST(PipelineTest, CoocWithEmptySeedFails) {
  MockBackend backend;
  PipelineConfig config;
  config.cooc_check = true;
  EXPECT_TRUE(IsKind(Augmenter(config, backend).Run(ParallelCorpus{}).status(),
                     ErrorKind::kEmptyCorpus));
}

TEST(PipelineTest, WorkerCountDoesNotChangeOutput) {
  MockBackend backend({{"court", {{"judge", 0.5}, {"bench", 0.4}}},
                       {"fee", {{"charge", 0.5}}},
                       {"rules", {{"decides", 0.3}}}});
  Rows rows;
  for (int i = 0; i < 12; ++i) {
    rows.push_back({"the court fee rules " + std::to_string(i), "court fee " + std::to_string(i)});
  }
  PipelineConfig config;
  config.threshold = 0.3;
  config.rounds = 2;
  absl::StatusOr<RunResult> one = Augmenter(config, backend).Run(Corpus(rows));
  config.workers = 4;
  absl::StatusOr<RunResult> four = Augmenter(config, backend).Run(Corpus(rows));
  ASSERT_TRUE(one.ok() && four.ok());
  EXPECT_EQ(one->corpus.pairs, four->corpus.pairs);
  for (std::size_t r = 0; r < one->rounds.size(); ++r) {
    EXPECT_EQ(one->rounds[r].ToJson(), four->rounds[r].ToJson());
    EXPECT_TRUE(one->rounds[r].FunnelHolds());
  }
}

TEST(RoundStatsTest, JsonRoundTrip) {
  RoundStats s;
  s.round = 2;
  s.seed_pairs = 5;
  s.variants_src = 30;
  s.variants_tgt = 40;
  s.candidate_pairs = 1199;
  s.passed_similarity = 20;
  s.passed_cooc = 18;
  s.passed_qe = 17;
  s.emitted_after_dedup = 15;
  s.wall_time = std::chrono::duration<double>(1.5);
  const std::string line = s.ToJson();
  EXPECT_EQ(line.find("wall_time"), std::string::npos);
  EXPECT_TRUE(line.starts_with(R"({"round":2,"seed_pairs":5,"skipped_pairs":0,)"));
  absl::StatusOr<RoundStats> back = RoundStatsFromJson(line);
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back->ToJson(), line);
  EXPECT_NE(s.ToJson(true).find("\"wall_time_s\":1.5"), std::string::npos);
  EXPECT_FALSE(RoundStatsFromJson("{").ok());
}

TEST(RoundStatsTest, Funnel) {
  RoundStats s;
  s.candidate_pairs = 10;
  s.passed_similarity = 5;
  s.passed_cooc = 5;
  s.passed_qe = 4;
  s.emitted_after_dedup = 4;
  EXPECT_TRUE(s.FunnelHolds());
  s.emitted_after_dedup = 6;
  EXPECT_FALSE(s.FunnelHolds());
}

TEST(QeCrossCheckTest, SelfTranslationPasses) {
  MockBackend backend;
  ParallelCorpus c = Corpus({{"the court rules", "the court rules"}, {"a b", "A B"}});
  c.pairs[1].scores = ScoreSet{0.9, std::nullopt, std::nullopt};
  QeReport report = QeCrossCheck(c, backend, 0.8);
  EXPECT_EQ(report.passed, 2u);
  EXPECT_DOUBLE_EQ(report.pass_rate(), 1.0);
  EXPECT_NEAR(*report.entries[0].score, 1.0, 1e-12);
  // Seed pairs carry no scores; scored pairs get qe attached.
  EXPECT_FALSE(c.pairs[0].scores.has_value());
  EXPECT_NEAR(*c.pairs[1].scores->qe, 1.0, 1e-12);
}

TEST(QeCrossCheckTest, DisjointVocabularyFails) {
  MockBackend backend;
  ParallelCorpus c = Corpus({{"apple river", "stone cloud"}});
  QeReport report = QeCrossCheck(c, backend, 0.5);
  EXPECT_EQ(report.failed, 1u);
  EXPECT_DOUBLE_EQ(report.pass_rate(), 0.0);
  EXPECT_EQ(report.entries[0].score, 0.0);
}

TEST(QeCrossCheckTest, ErrorsCountedSeparately) {
  FlakyBackend backend{MockBackend()};
  ParallelCorpus c = Corpus({{"BOOM", "x"}, {"a", "a"}, {"a b", "c d"}});
  QeReport report = QeCrossCheck(c, backend, 0.5, 3);
  EXPECT_EQ(report.errors, 1u);
  EXPECT_EQ(report.passed, 1u);
  EXPECT_EQ(report.entries.size(), 3u);
  EXPECT_FALSE(report.entries[0].error.empty());
  EXPECT_EQ(report.entries[1].id, "1");
}

TEST(QeCrossCheckTest, CandidatePairs) {
  MockBackend backend;
  std::vector<CandidatePair> pairs(2);
  pairs[0].source_variant.text = "x y";
  pairs[0].target_variant.text = "x y";
  pairs[1].source_variant.text = "apple river";
  pairs[1].target_variant.text = "stone cloud";
  QeReport report = QeCrossCheck(std::span<CandidatePair>(pairs), backend, 0.8);
  EXPECT_EQ(report.passed, 1u);
  EXPECT_EQ(report.failed, 1u);
  EXPECT_TRUE(pairs[0].qe.has_value());
  EXPECT_DOUBLE_EQ(report.pass_rate(), 0.5);
}

}  // namespace
}  // namespace paraug
