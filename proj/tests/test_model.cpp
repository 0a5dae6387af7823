#include <doctest.h>

#include "oracle.hpp"
#include "pathweights/model.hpp"

using namespace pathweights;

TEST_SUITE("model") {

TEST_CASE("triangle fixture matrices") {
  const Model m = Model::from_sigma(oracle::triangle_graph(), oracle::triangle_sigma());
  CHECK(m.sigma().at("1", "3") == doctest::Approx(0.39 / 0.676).epsilon(1e-12));
  CHECK(m.kappa().at("1", "2") == doctest::Approx(-0.3).epsilon(1e-12));
  CHECK(m.partial_correlation("1", "2") == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(m.partial_correlation_matrix().at("2", "2") == 0.0);
  CHECK(m.correlation_matrix().at("3", "3") == 1.0);
  CHECK(m.scaled_concentration().at("1", "1") == 1.0);
}

TEST_CASE("sigma is reordered to graph order") {
  Eigen::MatrixXd s(2, 2);
  s << 2.0, 0.4, 0.4, 1.0;
  const Model m = Model::from_sigma(Graph({"b", "a"}, {{"a", "b"}}), SymMatrix({"a", "b"}, s));
  CHECK(m.sigma().labels() == std::vector<Label>{"b", "a"});
  CHECK(m.sigma().at("a", "a") == 2.0);
}

TEST_CASE("label mismatch, non positive definite and non adapted inputs") {
  Eigen::MatrixXd s(2, 2);
  s << 1.0, 0.4, 0.4, 1.0;
  try {
    Model::from_sigma(Graph({"a", "c"}, {}), SymMatrix({"a", "b"}, s));
    FAIL("mismatched labels accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexError);
  }

  Eigen::MatrixXd bad(2, 2);
  bad << 1.0, 2.0, 2.0, 1.0;
  try {
    Model::from_sigma(Graph({"a", "b"}, {{"a", "b"}}), SymMatrix({"a", "b"}, bad));
    FAIL("indefinite matrix accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveDefinite);
  }

  try {
    Model::from_sigma(Graph({"a", "b"}, {}), SymMatrix({"a", "b"}, s));
    FAIL("non-adapted matrix accepted");
  } catch (const NotAdaptedError& e) {
    CHECK(e.code() == ErrorCode::NotAdapted);
    REQUIRE(e.offending().size() == 1);
    CHECK(e.offending()[0].magnitude == doctest::Approx(0.4).epsilon(1e-12));
  }

  const auto d = diagnose(Graph({"a", "b"}, {}), SymMatrix({"a", "b"}, s));
  CHECK(d.positive_definite);
  CHECK_FALSE(d.adapted);
  CHECK(d.max_non_edge == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("edgeless model with identity covariance") {
  const Model m = Model::from_sigma(Graph({"a", "b", "c"}, {}), SymMatrix::identity({"a", "b", "c"}));
  CHECK(m.inflated_correlation_matrix().at("a", "a") == 1.0);
  CHECK(m.partial_correlation_matrix().at("a", "b") == 0.0);
}

TEST_CASE("from partial correlations sets K = I - R") {
  const Graph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const Model m = Model::from_partial_correlations(g, {{Edge("a", "b"), 0.5}, {Edge("b", "c"), -0.2}});
  CHECK(m.origin() == ModelOrigin::PartialCorrelations);
  CHECK(m.kappa().at("a", "b") == -0.5);
  CHECK(m.kappa().at("a", "a") == 1.0);
  CHECK(m.partial_correlation("b", "c") == doctest::Approx(-0.2).epsilon(1e-15));
  // Varrho equals Sigma when diag(K) = 1
  for (const auto& u : g.vertices())
    for (const auto& v : g.vertices())
      CHECK(m.inflated_correlation_matrix().at(u, v) == doctest::Approx(m.sigma().at(u, v)).epsilon(1e-12));

  CHECK_THROWS_AS(Model::from_partial_correlations(g, {{Edge("a", "b"), 0.5}}), Error);
  CHECK_THROWS_AS(Model::from_partial_correlations(g, {{Edge("a", "b"), 1.0}, {Edge("b", "c"), 0.0}}), Error);
  CHECK_THROWS_AS(
      Model::from_partial_correlations(g, {{Edge("a", "b"), 0.1}, {Edge("b", "c"), 0.1}, {Edge("a", "c"), 0.1}}),
      Error);

  const Graph tri = oracle::triangle_graph();
  try {
    Model::from_partial_correlations(tri, {{Edge("1", "2"), 0.9}, {Edge("1", "3"), 0.9}, {Edge("2", "3"), 0.9}});
    FAIL("indefinite I - R accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveDefinite);
  }
}

TEST_CASE("derived matrices agree with oracles on random models") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto rm = oracle::random_model(seed, 3 + seed % 6, 0.5);
    const Model m = Model::from_sigma(rm.graph, rm.sigma);
    const auto s = oracle::to_mat(rm.sigma.values());
    const auto k = oracle::inverse(s);
    const auto n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(m.inflated_correlation_matrix()(i, i) ==
            doctest::Approx(s[i][i] * k[i][i]).epsilon(1e-10));
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(m.correlation_matrix()(i, j) ==
              doctest::Approx(s[i][j] / std::sqrt(s[i][i] * s[j][j])).epsilon(1e-10));
        if (i != j)
          CHECK(m.partial_correlation_matrix()(i, j) ==
                doctest::Approx(-k[i][j] / std::sqrt(k[i][i] * k[j][j])).epsilon(1e-10).scale(1));
      }
    }
    // Varrho = (I - R)^{-1}
    const auto vr = oracle::inverse(oracle::to_mat(m.scaled_concentration().values()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(std::abs(m.inflated_correlation_matrix()(i, j) - vr[i][j]) < 1e-9 * (1 + std::abs(vr[i][j])));
  }
}

TEST_CASE("conditional views match Schur complements") {
  const auto rm = oracle::random_model(77, 7, 0.5);
  const Model m = Model::from_sigma(rm.graph, rm.sigma);
  const VertexSet a{"v1", "v2", "v4", "v6"};
  const auto names = rm.sigma.labels();
  const auto ai = oracle::indices(names, a);
  const auto want = oracle::schur(oracle::to_mat(rm.sigma.values()), ai,
                                  oracle::complement_indices(names.size(), ai));
  const SymMatrix got = m.conditional_covariance(a);
  const Model cm = m.conditional(a);
  CHECK(cm.graph().vertex_count() == 4);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(got(i, j) == doctest::Approx(want[i][j]).epsilon(1e-9).scale(1));
      CHECK(cm.sigma()(i, j) == doctest::Approx(want[i][j]).epsilon(1e-9).scale(1));
    }
  const SymMatrix cc = m.conditional_correlation(a);
  CHECK(cc(0, 0) == doctest::Approx(1.0));
  CHECK(cc(0, 1) == doctest::Approx(want[0][1] / std::sqrt(want[0][0] * want[1][1])).epsilon(1e-9));
}

TEST_CASE("measure scales") {
  const auto rm = oracle::random_model(5, 4, 0.6);
  const Model m = Model::from_sigma(rm.graph, rm.sigma);
  CHECK(m.scale(Measure::covariance(), "v0") == 1.0);
  CHECK(m.scale(Measure::correlation(), "v0") == doctest::Approx(1.0 / std::sqrt(m.sigma().at("v0", "v0"))));
  CHECK(m.scale(Measure::inflated_correlation(), "v1") == doctest::Approx(std::sqrt(m.kappa().at("v1", "v1"))));
  CHECK_THROWS_AS(Measure::custom({{"v0", 0.0}}), Error);
  const Measure c = Measure::custom({{"v0", 2.0}, {"v1", -1.0}, {"v2", 0.5}, {"v3", 3.0}});
  const SymMatrix g = m.scaled(c);
  CHECK(g.at("v0", "v1") == doctest::Approx(-2.0 * m.sigma().at("v0", "v1")));
}

}
