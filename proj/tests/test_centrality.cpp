#include <doctest.h>

#include "oracle.hpp"
#include "pathweights/centrality.hpp"
#include "pathweights/decompose.hpp"
#include "pathweights/fit.hpp"

using namespace pathweights;

TEST_SUITE("centrality") {

TEST_CASE("triangle fixture pair betweenness") {
  const Model m = Model::from_sigma(oracle::triangle_graph(), oracle::triangle_sigma());
  const auto b = pair_betweenness(m, "1", "3");
  REQUIRE(b.contains("2"));
  CHECK(b.at("2") == doctest::Approx(0.09 / 0.39).epsilon(1e-12));
  CHECK(std::abs(b.at("2") - 0.2307) < 1e-4);
}

TEST_CASE("leaves have zero betweenness and normalization spans [0,1]") {
  const Graph g({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"b", "e"}});
  const Model m = Model::from_partial_correlations(
      g, {{Edge("a", "b"), 0.3}, {Edge("b", "c"), 0.3}, {Edge("c", "d"), 0.3}, {Edge("b", "e"), 0.3}});
  const auto t = betweenness(m);
  CHECK(t.at("a").betweenness == 0.0);
  CHECK(t.at("d").betweenness == 0.0);
  CHECK(t.at("e").betweenness == 0.0);
  // tree: every pair has a unique path, so B(v) counts pairs routed through v
  CHECK(t.at("b").betweenness == doctest::Approx(5.0));
  CHECK(t.at("c").betweenness == doctest::Approx(3.0));
  CHECK(t.at("b").normalized == 1.0);
  CHECK(t.at("a").normalized == 0.0);
  CHECK(t.at("b").degree == 3);
  CHECK_FALSE(t.degenerate);
}

TEST_CASE("disconnected pairs are skipped") {
  const Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  const Model m = Model::from_partial_correlations(g, {{Edge("a", "b"), 0.2}, {Edge("c", "d"), 0.2}});
  const auto t = betweenness(m);
  CHECK(t.skipped_pairs.size() == 4);
  CHECK(t.degenerate);
  for (const auto& r : t.records) CHECK(r.normalized == 0.0);
  CHECK_THROWS_AS(t.at("zz"), Error);
}

TEST_CASE("zero weight pairs are skipped") {
  const Graph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const Model m = Model::from_partial_correlations(g, {{Edge("a", "b"), 0.0}, {Edge("b", "c"), 0.4}});
  const auto t = betweenness(m);
  CHECK(t.skipped_pairs.size() == 2);
}

TEST_CASE("shortest path mode drops longer paths") {
  const Model m = Model::from_sigma(oracle::triangle_graph(), oracle::triangle_sigma());
  const auto t = betweenness(m, BetweennessMode::ShortestPaths);
  for (const auto& r : t.records) CHECK(r.betweenness == 0.0);
  CHECK(t.degenerate);
}

TEST_CASE("measure does not change betweenness") {
  for (std::uint64_t seed = 500; seed < 510; ++seed) {
    const auto rm = oracle::random_model(seed, 6, 0.5);
    const Model m = Model::from_sigma(rm.graph, rm.sigma);
    const auto base = betweenness(m);
    for (const auto& meas : {Measure::covariance(), Measure::correlation()}) {
      const auto other = betweenness(m, BetweennessMode::AllPaths, kDefaultPathCap, meas);
      for (std::size_t i = 0; i < base.records.size(); ++i)
        CHECK(std::abs(base.records[i].betweenness - other.records[i].betweenness) <= 1e-10);
    }
  }
}

TEST_CASE("signed MTP2: shares equal signed proportions of varrho") {
  const Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}, {"b", "d"}});
  const Model m = Model::from_partial_correlations(
      g, {{Edge("a", "b"), 0.3}, {Edge("b", "c"), -0.2}, {Edge("c", "d"), -0.25}, {Edge("a", "d"), 0.1}, {Edge("b", "d"), 0.2}});
  REQUIRE(mtp2_sign_search(m).has_value());
  const auto r = decompose(m, "a", "c", Measure::inflated_correlation());
  double through_b = 0.0;
  for (const auto& e : r.entries)
    if (e.path.is_interior("b")) through_b += e.weight;
  const auto b = pair_betweenness(m, "a", "c");
  CHECK(b.at("b") == doctest::Approx(through_b / r.target).epsilon(1e-10));
}

}
