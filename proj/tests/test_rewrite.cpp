#include <gtest/gtest.h>

#include <cruciform/matching.hpp>
#include <cruciform/rewrite.hpp>
#include <cruciform/toys.hpp>

using namespace cruciform;

namespace {

LaurentMonomial M(long c, std::int64_t e) { return {Rational(c), e}; }

WeightedGraph single_edge(const LaurentMonomial& w) {
  WeightedGraph g;
  g.add_vertex(0, 0);
  g.add_vertex(1, 0);
  g.add_edge(0, 1, w);
  return g;
}

WeightedGraph cycle4() {
  WeightedGraph g;
  for (int k = 0; k < 4; ++k) g.add_vertex(k % 2, k / 2);
  g.add_edge(0, 1, M(2, 1));
  g.add_edge(1, 3, M(3, 0));
  g.add_edge(3, 2, M(5, -1));
  g.add_edge(2, 0, M(7, 2));
  return g;
}

// Inner 4-cycle 0..3 with legs to pendant outer vertices 4..7.
WeightedGraph standalone_spider(const std::array<LaurentMonomial, 4>& w) {
  WeightedGraph g;
  for (int k = 0; k < 8; ++k) g.add_vertex(k, k / 4);
  for (std::size_t k = 0; k < 4; ++k) {
    g.add_edge(k, (k + 1) % 4, w[k]);
    g.add_edge(k, k + 4, LaurentMonomial::q(0));
  }
  return g;
}

void expect_contract(const WeightedGraph& in, const RewriteResult& r) {
  EXPECT_EQ(matching_poly_brute(in), r.factor * matching_poly_brute(r.graph));
}

}  // namespace

TEST(VertexSplit, Examples) {
  auto e = single_edge(M(3, 1));
  auto r = vertex_split(e, 0, {1}, {});
  EXPECT_EQ(r.factor, LaurentPoly::one());
  EXPECT_EQ(r.graph.vertex_count(), 4u);
  expect_contract(e, r);
  auto c = cycle4();
  expect_contract(c, vertex_split(c, 0, {1}, {2}));
  expect_contract(c, vertex_split(c, 3, {}, {1, 2}));
}

TEST(VertexSplit, BadPartition) {
  auto c = cycle4();
  for (auto [h, k] : {std::pair<std::vector<std::size_t>, std::vector<std::size_t>>{{1}, {1, 2}}, {{1}, {}}, {{1, 3}, {2}}}) {
    try {
      vertex_split(c, 0, h, k);
      FAIL();
    } catch (const Error& ex) {
      EXPECT_EQ(ex.code(), Errc::BadPartition);
    }
  }
}

TEST(StarScale, Examples) {
  auto e = single_edge(M(3, 1));
  auto r = star_scale(e, 0, Rational(5));
  EXPECT_EQ(r.graph.edge(0).w, M(15, 1));
  EXPECT_EQ(r.factor, LaurentPoly::constant(make_rational(1, 5)));
  expect_contract(e, r);
  auto id = star_scale(e, 1, Rational(1));
  EXPECT_EQ(id.factor, LaurentPoly::one());
  auto c = cycle4();
  for (std::size_t v = 0; v < 4; ++v) expect_contract(c, star_scale(c, v, Rational(2)));
  try {
    star_scale(c, 0, Rational(0));
    FAIL();
  } catch (const Error& ex) {
    EXPECT_EQ(ex.code(), Errc::ZeroScale);
  }
}

TEST(UrbanRenewal, UnitWeightsFactorTwo) {
  auto g = standalone_spider({M(1, 0), M(1, 0), M(1, 0), M(1, 0)});
  auto r = urban_renewal(g, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  EXPECT_EQ(r.factor, LaurentPoly::constant(Rational(2)));
  expect_contract(g, r);
}

TEST(UrbanRenewal, StandaloneWeighted) {
  auto g = standalone_spider({M(2, 1), M(3, 2), M(5, 1), M(1, 0)});
  auto r = urban_renewal(g, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  EXPECT_EQ(r.factor, LaurentPoly::monomial(Rational(13), 2));
  expect_contract(g, r);
}

TEST(UrbanRenewal, Errors) {
  auto g = standalone_spider({M(1, 0), M(1, 0), M(1, 0), M(1, 0)});
  auto leaky = g;
  leaky.add_edge(0, 6, M(1, 0));
  try {
    urban_renewal(leaky, {{0, 1, 2, 3}, {4, 5, 6, 7}});
    FAIL();
  } catch (const Error& ex) {
    EXPECT_EQ(ex.code(), Errc::BadSpider);
  }
  auto singular = standalone_spider({M(1, 0), M(1, 0), M(-1, 0), M(1, 0)});
  try {
    urban_renewal(singular, {{0, 1, 2, 3}, {4, 5, 6, 7}});
    FAIL();
  } catch (const Error& ex) {
    EXPECT_EQ(ex.code(), Errc::SingularWeights);
  }
}

TEST(ForcedEdges, Examples) {
  auto e = single_edge(M(3, 1));
  auto r = remove_forced_edges(e);
  EXPECT_EQ(r.graph.vertex_count(), 0u);
  EXPECT_EQ(r.factor, LaurentPoly::monomial(Rational(3), 1));
  WeightedGraph path;
  for (int k = 0; k < 4; ++k) path.add_vertex(k, 0);
  path.add_edge(0, 1, M(2, 0));
  path.add_edge(1, 2, M(3, 0));
  path.add_edge(2, 3, M(5, 0));
  auto rp = remove_forced_edges(path);
  EXPECT_EQ(rp.factor, LaurentPoly::constant(Rational(10)));
  EXPECT_EQ(matching_poly_brute(rp.graph), LaurentPoly::one());
  expect_contract(path, rp);
  WeightedGraph iso;
  iso.add_vertex(0, 0);
  try {
    remove_forced_edges(iso);
    FAIL();
  } catch (const Error& ex) {
    EXPECT_EQ(ex.code(), Errc::Unmatchable);
  }
}

TEST(RewriteCorpus, AtLeastTwentyGraphs) { EXPECT_GE(toy_corpus().size(), 20u); }

TEST(RewriteCorpus, EveryRewriteKeepsTheContract) {
  for (const char* which : {"star", "split", "forced", "spider"}) {
    auto rs = rewrite_corpus_checks(which);
    EXPECT_FALSE(rs.empty()) << which;
    for (const auto& r : rs) EXPECT_TRUE(r.equal) << which << ' ' << r.instance.dump();
  }
}

TEST(RewriteCorpus, SpidersFoundInGadgets) {
  std::size_t found = 0;
  for (const auto& t : toy_corpus()) found += find_spiders(t.graph).size();
  EXPECT_GE(found, 3u);
}
