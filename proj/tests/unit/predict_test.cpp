#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include <Eigen/SVD>

#include "support/scratch.hpp"
#include "anchorlink/predict/at.hpp"
#include "anchorlink/predict/atilp.hpp"
#include "anchorlink/predict/deepwalk.hpp"
#include "anchorlink/predict/lsa_space.hpp"
#include "anchorlink/predict/predictor.hpp"
#include "anchorlink/predict/random.hpp"
#include "anchorlink/rng.hpp"
#include "anchorlink/text/tfidf.hpp"
#include "anchorlink/text/tokenizer.hpp"
#include "support/oracles.hpp"

namespace anchorlink {
namespace {

using PatternMap = std::map<std::string, std::set<NodeId>>;

std::vector<bool> all_training(std::size_t n) { return std::vector<bool>(n, true); }

LsaOptions lsa_dim(int d) {
  LsaOptions o;
  o.dimension = d;
  return o;
}

// Abstract modeled on the lead of an article about Abraham Lincoln.
const std::vector<Article> kLincolnArticles{
    {0, "Abraham Lincoln",
     "Abraham Lincoln was an American statesman and lawyer who led the nation through the American Civil War, "
     "its greatest moral, constitutional, and political crisis, abolished slavery and strengthened the federal "
     "government.",
     {}},
    {1, "Politics", "Politics is the set of activities associated with making decisions in groups.", {}},
    {2, "American Civil War", "The American Civil War was a civil war in the United States.", {}},
    {3, "Slavery in the United States", "Slavery in the United States was the legal institution of slavery.", {}},
};

TEST(PredictAt, TitleVersusAnchorModeOnLincolnAbstract) {
  const AnchorMap titles = build_title_map(kLincolnArticles);
  EXPECT_FALSE(predict_at(titles, kLincolnArticles[0], 1, 4));  // "political" is not "politics"
  EXPECT_TRUE(predict_at(titles, kLincolnArticles[0], 2, 4));
  const AnchorMap anchors(AnchorMode::kAnchor, PatternMap{{"political", {1}}, {"slavery", {3}}});
  EXPECT_TRUE(predict_at(anchors, kLincolnArticles[0], 1, 4));
  EXPECT_TRUE(predict_at(anchors, kLincolnArticles[0], 3, 4));
  EXPECT_FALSE(predict_at(anchors, kLincolnArticles[0], 2, 4));
  EXPECT_THROW(predict_at(anchors, kLincolnArticles[0], 9, 4), ArgumentError);
}

TEST(ScoreRandom, ReproducibleUniformAndInRange) {
  EXPECT_EQ(score_random(5, 1, 2), score_random(5, 1, 2));
  EXPECT_NE(score_random(5, 1, 2), score_random(6, 1, 2));
  double sum = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double s = score_random(17, static_cast<NodeId>(i / 300), static_cast<NodeId>(i % 300));
    ASSERT_GE(s, 0.0);
    ASSERT_LT(s, 1.0);
    sum += s;
  }
  EXPECT_GE(sum / n, 0.495);
  EXPECT_LE(sum / n, 0.505);
}

TEST(ScoreLsa, IdenticalAbstractsAndZeroVectors) {
  const std::vector<Article> articles{{0, "A", "red green blue", {}},
                                      {1, "B", "red green blue", {}},
                                      {2, "C", "cyan magenta", {}},
                                      {3, "D", "", {}}};
  const LsaSpace space(articles, all_training(4), lsa_dim(3));
  EXPECT_NEAR(score_lsa(space, 0, 1), 1.0, 1e-12);
  EXPECT_NEAR(score_lsa(space, 0, 3), 0.5, 1e-12);
}

TEST(ScoreLsa, MatchesDenseSvdOracle) {
  const std::vector<Article> articles{{0, "A", "apples and oranges and pears", {}},
                                      {1, "B", "oranges grow on trees", {}},
                                      {2, "C", "trees and forests", {}},
                                      {3, "D", "apples pears plums", {}}};
  const int d = 2;
  const LsaSpace space(articles, all_training(4), lsa_dim(d));
  std::vector<std::vector<std::string>> corpus;
  for (const Article& a : articles) corpus.push_back(tokenize(a.abstract));
  const Eigen::MatrixXd dense(build_tfidf(corpus).matrix);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(dense, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::MatrixXd emb = svd.matrixU().leftCols(d) * svd.singularValues().head(d).asDiagonal();
  for (NodeId s = 0; s < 4; ++s) {
    for (NodeId t = 0; t < 4; ++t) {
      const Eigen::VectorXd u = emb.row(s), v = emb.row(t);
      const double cos = u.norm() == 0 || v.norm() == 0 ? 0.0 : u.dot(v) / (u.norm() * v.norm());
      EXPECT_NEAR(score_lsa(space, s, t), 0.5 * (1 + cos), 1e-9) << s << "," << t;
    }
  }
}

TEST(LsaSpace, HeldOutDocumentsAreFoldedInFromText) {
  const std::vector<Article> articles{{0, "A", "alpha beta gamma", {}},
                                      {1, "B", "beta delta", {}},
                                      {2, "C", "gamma epsilon", {}},
                                      {3, "H", "alpha delta unseenword", {}}};
  const LsaSpace space(articles, {true, true, true, false}, lsa_dim(3));
  EXPECT_FALSE(space.model().tfidf().vocabulary.index("unseenword"));
  const Eigen::VectorXd folded = space.model().embed_text(articles[3].abstract);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(space.embedding(3)[i], folded(i), 1e-12);
}

DocumentNetwork two_cliques() {
  // {0,1,2,3} and {4,5,6,7}, bridged by 3-4.
  DocumentNetwork::Builder b(8);
  for (NodeId base : {0u, 4u})
    for (NodeId i = 0; i < 4; ++i)
      for (NodeId j = 0; j < 4; ++j)
        if (i != j) b.add(base + i, base + j, "x");
  b.add(3, 4, "bridge");
  return b.build();
}

TEST(DeepWalk, CliquesSeparate) {
  DeepWalkOptions options;
  options.dimension = 16;
  options.walks_per_node = 40;
  options.walk_length = 20;
  options.window = 3;
  options.seed = 7;
  const DeepWalkModel model = fit_deepwalk(two_cliques(), options);
  double min_intra = 1.0, max_inter = 0.0;
  for (NodeId a = 0; a < 8; ++a) {
    for (NodeId b = a + 1; b < 8; ++b) {
      const double s = score_deepwalk(model, a, b);
      if ((a < 4) == (b < 4)) min_intra = std::min(min_intra, s);
      else max_inter = std::max(max_inter, s);
    }
  }
  EXPECT_GT(min_intra, max_inter);
  EXPECT_NEAR(score_deepwalk(model, 2, 2), 1.0, 1e-6);
}

TEST(DeepWalk, DeterministicPerSeed) {
  DeepWalkOptions options;
  options.dimension = 8;
  options.walks_per_node = 5;
  options.seed = 3;
  const DeepWalkModel a = fit_deepwalk(two_cliques(), options);
  const DeepWalkModel b = fit_deepwalk(two_cliques(), options);
  for (NodeId v = 0; v < 8; ++v) {
    const auto ea = a.node_embedding(v), eb = b.node_embedding(v);
    EXPECT_TRUE(std::equal(ea.begin(), ea.end(), eb.begin()));
  }
}

TEST(DeepWalk, IsolatedNodeStaysNearInitialization) {
  DeepWalkOptions options;
  options.dimension = 32;
  options.walks_per_node = 10;
  options.seed = 1;
  DocumentNetwork::Builder b(3);
  b.add(0, 1, "x").add(1, 0, "y");
  const DocumentNetwork net = b.build();
  const auto walks = generate_walks(net, options);
  for (const auto& walk : walks) {
    if (walk.front() == 2) EXPECT_EQ(walk.size(), 1u);
  }
  const DeepWalkModel model = fit_deepwalk(net, options);
  double norm = 0;
  for (float x : model.node_embedding(2)) norm += double(x) * x;
  const double init_scale = 0.5 / options.dimension * std::sqrt(double(options.dimension));
  EXPECT_LT(std::sqrt(norm), 1.5 * init_scale);
}

TEST(DeepWalk, UnseenNodeIsUnsupported) {
  DeepWalkOptions options;
  options.dimension = 4;
  options.walks_per_node = 2;
  const DocumentNetwork full = two_cliques();
  std::vector<bool> keep(8, true);
  keep[5] = false;
  const DeepWalkModel model = fit_deepwalk(full.induced(keep), options);
  EXPECT_THROW(score_deepwalk(model, 0, 5), UnsupportedModeError);
  EXPECT_THROW(fit_deepwalk(DocumentNetwork::Builder(0).build(), options), Error);
}

TEST(DeepWalk, WalkShape) {
  DeepWalkOptions options;
  options.walks_per_node = 3;
  options.walk_length = 7;
  const auto walks = generate_walks(two_cliques(), options);
  EXPECT_EQ(walks.size(), 24u);
  for (const auto& walk : walks) {
    EXPECT_EQ(walk.size(), 7u);
    for (std::size_t i = 1; i < walk.size(); ++i) {
      const bool linked = two_cliques().has_edge(walk[i - 1], walk[i]) || two_cliques().has_edge(walk[i], walk[i - 1]);
      EXPECT_TRUE(linked);
    }
  }
}

double relative_error(double a, double b) { return std::abs(a - b) / std::max({1e-8, std::abs(a), std::abs(b)}); }

TEST(Sgns, GradientMatchesCentralDifferences) {
  Rng rng(31);
  for (int config = 0; config < 20; ++config) {
    const std::size_t d = 2 + rng.uniform_index(10);
    const std::size_t k = 1 + rng.uniform_index(5);
    std::vector<double> center(d), positive(d);
    std::vector<std::vector<double>> negatives(k, std::vector<double>(d));
    for (auto& x : center) x = rng.normal() * 0.5;
    for (auto& x : positive) x = rng.normal() * 0.5;
    for (auto& n : negatives)
      for (auto& x : n) x = rng.normal() * 0.5;
    auto loss = [&]() {
      std::vector<std::span<const double>> spans(negatives.begin(), negatives.end());
      return sgns_gradient(center, positive, spans).loss;
    };
    std::vector<std::span<const double>> spans(negatives.begin(), negatives.end());
    const SgnsGradient grad = sgns_gradient(center, positive, spans);
    const double h = 1e-6;
    auto check = [&](std::vector<double>& v, const std::vector<double>& analytic) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double saved = v[i];
        v[i] = saved + h;
        const double up = loss();
        v[i] = saved - h;
        const double down = loss();
        v[i] = saved;
        EXPECT_LT(relative_error((up - down) / (2 * h), analytic[i]), 1e-4);
      }
    };
    check(center, grad.center);
    check(positive, grad.positive);
    for (std::size_t j = 0; j < k; ++j) check(negatives[j], grad.negatives[j]);
  }
}

TEST(Sgns, StepDescendsTheLoss) {
  std::vector<float> c{0.1f, -0.2f, 0.3f}, p{0.2f, 0.1f, -0.1f}, n{-0.3f, 0.2f, 0.1f}, scratch(3);
  auto as_double = [](const std::vector<float>& v) { return std::vector<double>(v.begin(), v.end()); };
  auto loss = [&]() {
    const auto nd = as_double(n);
    const std::vector<std::span<const double>> negs{nd};
    return sgns_gradient(as_double(c), as_double(p), negs).loss;
  };
  const double before = loss();
  const std::vector<std::span<float>> negs{n};
  sgns_step(c, p, negs, 0.1f, scratch);
  EXPECT_LT(loss(), before);
}

TEST(Ols, RecoversPlantedCoefficients) {
  Rng rng(41);
  std::vector<std::vector<double>> rows;
  std::vector<double> y;
  for (int i = 0; i < 2000; ++i) {
    const double s1 = rng.uniform01(), s2 = rng.uniform01(), s3 = rng.uniform01();
    rows.push_back({s1, s2, s3});
    y.push_back(0.10 * s1 + 0.36 * s2 + 1.06 * s3);
  }
  const OlsFit fit = fit_ols(rows, y);
  EXPECT_NEAR(fit.coefficients[0], 0.10, 1e-6);
  EXPECT_NEAR(fit.coefficients[1], 0.36, 1e-6);
  EXPECT_NEAR(fit.coefficients[2], 1.06, 1e-6);
  EXPECT_NEAR(fit.intercept, 0.0, 1e-6);
}

TEST(Ols, MatchesNormalEquationsOracle) {
  Rng rng(42);
  std::vector<std::vector<double>> rows;
  std::vector<double> y;
  for (int i = 0; i < 10; ++i) {
    rows.push_back({rng.normal(), rng.normal(), rng.normal()});
    y.push_back(rng.uniform01() < 0.5 ? 0.0 : 1.0);
  }
  const OlsFit fit = fit_ols(rows, y);
  const std::vector<double> beta = testing::normal_equations_ols(rows, y);
  EXPECT_NEAR(fit.intercept, beta[0], 1e-9);
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(fit.coefficients[j], beta[j + 1], 1e-9);
}

TEST(Ols, ConstantFeatureGivesFiniteMinimumNormSolution) {
  std::vector<std::vector<double>> rows;
  std::vector<double> y;
  for (int i = 0; i < 20; ++i) {
    rows.push_back({i * 0.1, (i % 3) * 0.5, 0.7});
    y.push_back(i % 2);
  }
  const OlsFit fit = fit_ols(rows, y);
  for (double c : fit.coefficients) EXPECT_TRUE(std::isfinite(c));
  EXPECT_TRUE(std::isfinite(fit.intercept));
  // The constant column and the intercept share their weight.
  EXPECT_NEAR(fit.coefficients[2] / fit.intercept, 0.7, 1e-6);
}

class AtilpFixture : public ::testing::Test {
 protected:
  std::vector<Article> articles{
      {0, "Source", "the river bank flooded near the old mill and the bank vault", {}},
      {1, "River", "a river flows to the sea past the bank", {}},
      {2, "Bank", "a bank holds money in a vault", {}},
      {3, "Mill", "the old mill ground grain by the river", {}},
      {4, "Sea", "the sea is salty", {}}};
  LsaSpace space{articles, all_training(5), lsa_dim(4)};
};

TEST_F(AtilpFixture, AnchorEqualToSourceAbstractGivesUnitS1) {
  CandidatePair pair{0, 1, {{normalize_pattern(articles[0].abstract), 0, articles[0].abstract.size()}}, {}};
  const auto scores = compute_atilp_scores(space, pair);
  ASSERT_EQ(scores.size(), 1u);
  EXPECT_NEAR(scores[0].s1, 1.0, 1e-6);
}

TEST_F(AtilpFixture, OutOfVocabularyAnchorGivesZeroS1S2) {
  CandidatePair pair{0, 1, {{"qwertyuiop", 0, 1}}, {}};
  const auto scores = compute_atilp_scores(space, pair);
  EXPECT_EQ(scores[0].s1, 0.0);
  EXPECT_EQ(scores[0].s2, 0.0);
  EXPECT_NEAR(scores[0].s3, 2 * score_lsa(space, 0, 1) - 1, 1e-12);
}

TEST_F(AtilpFixture, ScoreIsClampedMaximumOverAnchors) {
  CandidatePair pair{0, 2, {{"bank", 4, 8}, {"bank vault", 50, 60}}, {}};
  AtilpModel model;
  model.coefficients = {0.2, 0.9, -0.3};
  model.intercept = 0.05;
  const auto scores = compute_atilp_scores(space, pair);
  ASSERT_EQ(scores.size(), 2u);
  double best = -1e9;
  for (const auto& s : scores) best = std::max(best, 0.05 + 0.2 * s.s1 + 0.9 * s.s2 - 0.3 * s.s3);
  EXPECT_NEAR(score_atilp(model, space, &pair), std::clamp(best, 0.0, 1.0), 1e-12);
  model.intercept = 5.0;
  EXPECT_EQ(score_atilp(model, space, &pair), 1.0);
  model.intercept = -5.0;
  EXPECT_EQ(score_atilp(model, space, &pair), 0.0);
  EXPECT_EQ(score_atilp(model, space, nullptr), 0.0);
}

TEST_F(AtilpFixture, ReducesToLsaOrderingWithUnitS3Coefficient) {
  AtilpModel model;
  model.coefficients = {0.0, 0.0, 1.0};
  std::vector<std::pair<double, double>> scores;  // (atilp, lsa)
  for (NodeId t = 1; t < 5; ++t) {
    CandidatePair pair{0, t, {{"bank", 4, 8}}, {}};
    const double atilp = score_atilp(model, space, &pair);
    const double lsa = score_lsa(space, 0, t);
    EXPECT_NEAR(atilp, std::clamp(2 * lsa - 1, 0.0, 1.0), 1e-12);
    scores.emplace_back(atilp, lsa);
  }
  for (const auto& a : scores)
    for (const auto& b : scores)
      if (a.second < b.second) EXPECT_LE(a.first, b.first);
  // With the affine map (1 + s3) / 2 the two predictors coincide exactly.
  model.coefficients = {0.0, 0.0, 0.5};
  model.intercept = 0.5;
  for (NodeId t = 1; t < 5; ++t) {
    CandidatePair pair{0, t, {{"bank", 4, 8}}, {}};
    EXPECT_NEAR(score_atilp(model, space, &pair), score_lsa(space, 0, t), 1e-12);
  }
}

TEST(FitAtilp, SamplesTrainingCandidatesAndRecordsShortfall) {
  const std::vector<Article> articles{{0, "Alpha", "alpha sees beta and gamma and delta", {}},
                                      {1, "Beta", "beta sees alpha", {}},
                                      {2, "Gamma", "gamma sees delta and alpha", {}},
                                      {3, "Delta", "delta sees beta", {}}};
  const DocumentNetwork net = DocumentNetwork::Builder(4)
                                  .add(0, 1, "beta")
                                  .add(1, 0, "alpha")
                                  .add(2, 3, "delta")
                                  .add(3, 1, "beta")
                                  .add(2, 0, "alpha")
                                  .build();
  const AnchorMap map = build_anchor_map(net);
  const CandidateIndex index(map, articles);
  const LsaSpace space(articles, all_training(4), lsa_dim(3));
  const AtilpModel model = fit_atilp(net, space, index);
  EXPECT_EQ(model.positives_used, 5u);
  EXPECT_EQ(model.negatives_used, 1u);  // alpha mentions delta without linking
  EXPECT_EQ(model.positive_shortfall, 995u);
  EXPECT_EQ(model.negative_shortfall, 999u);
  for (double c : model.coefficients) EXPECT_TRUE(std::isfinite(c));

  const DocumentNetwork no_links = DocumentNetwork::Builder(4).build();
  EXPECT_THROW(fit_atilp(no_links, space, index), Error);
}

TEST(Predictors, FactoryAndExternalScores) {
  PredictorOptions options;
  for (const char* name : {"random", "at_title", "at_anchor", "lsa", "deepwalk", "atilp"}) {
    EXPECT_EQ(make_predictor(name, options)->name(), name);
  }
  EXPECT_THROW(make_predictor("g2g", options), ArgumentError);
  EXPECT_TRUE(make_predictor("at_anchor", options)->binary());
  EXPECT_FALSE(make_predictor("deepwalk", options)->supports(EvalMode::kInductive));

  const auto dir = testing::scratch_path("external");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "inductive_1.tsv") << "0\t1\t0.25\n2\t3\t1\n";
  auto external = make_external_predictor("g2g", (dir / "{mode}_{run}.tsv").string());
  TrainingContext context;
  context.mode = EvalMode::kInductive;
  context.run = 1;
  external->fit(context);
  EXPECT_EQ(external->score(0, 1), 0.25);
  EXPECT_EQ(external->score(2, 3), 1.0);
  EXPECT_THROW(external->score(1, 0), Error);
  std::ofstream(dir / "bad.tsv") << "0\t1\t1.5\n";
  EXPECT_THROW(read_predictions(dir / "bad.tsv"), ParseError);
}

}  // namespace
}  // namespace anchorlink
