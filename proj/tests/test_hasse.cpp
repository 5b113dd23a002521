#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "emdpoly/hasse.hpp"

using namespace emdpoly;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

int index_of(const HasseGraph& g, const Partition& p) {
  const auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), p);
  REQUIRE(it != g.vertices.end());
  REQUIRE(*it == p);
  return static_cast<int>(it - g.vertices.begin());
}

bool has_edge(const HasseGraph& g, const Partition& a, const Partition& b) {
  const int i = index_of(g, a);
  const int j = index_of(g, b);
  const auto& nbrs = g.adjacency[static_cast<std::size_t>(i)];
  return std::find(nbrs.begin(), nbrs.end(), j) != nbrs.end();
}

long long edge_count(const HasseGraph& g) {
  long long total = 0;
  for (const auto& nbrs : g.adjacency) {
    total += static_cast<long long>(nbrs.size());
  }
  return total / 2;
}

}  // namespace

TEST_CASE("build_hasse small cases") {
  const HasseGraph g11 = build_hasse({1, 1});
  CHECK(g11.vertices.size() == 2);
  CHECK(edge_count(g11) == 1);

  const HasseGraph g0b = build_hasse({0, 5});
  CHECK(g0b.vertices.size() == 1);
  CHECK(edge_count(g0b) == 0);

  const HasseGraph g22 = build_hasse({2, 2});
  CHECK(g22.vertices.size() == 6);
  CHECK(edge_count(g22) == 6);
  CHECK(has_edge(g22, P({}), P({1})));
  CHECK(has_edge(g22, P({1}), P({2})));
  CHECK(has_edge(g22, P({1}), P({1, 1})));
  CHECK(has_edge(g22, P({2}), P({2, 1})));
  CHECK(has_edge(g22, P({1, 1}), P({2, 1})));
  CHECK(has_edge(g22, P({2, 1}), P({2, 2})));
  CHECK_FALSE(has_edge(g22, P({2}), P({1, 1})));
  CHECK_FALSE(has_edge(g22, P({}), P({2})));
}

TEST_CASE("vertex count equals C(a+b, a)") {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      CHECK(BigInt(build_hasse({a, b}).vertices.size()) == binomial(a + b, a));
    }
  }
}

TEST_CASE("adjacency matches the all-pairs symmetric-difference oracle") {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const HasseGraph g = build_hasse({a, b});
      const int n = static_cast<int>(g.vertices.size());
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const bool adjacent =
              std::binary_search(g.adjacency[static_cast<std::size_t>(i)].begin(),
                                 g.adjacency[static_cast<std::size_t>(i)].end(), j);
          const bool one_box = sym_diff_size(g.vertices[static_cast<std::size_t>(i)],
                                             g.vertices[static_cast<std::size_t>(j)]) == 1;
          CAPTURE(a);
          CAPTURE(b);
          CHECK(adjacent == one_box);
        }
      }
    }
  }
}

TEST_CASE("BFS distance equals the symmetric difference") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const HasseGraph g = build_hasse({a, b});
      const int n = static_cast<int>(g.vertices.size());
      // per-source BFS, checked directly against |λ ⊖ μ|
      for (int src = 0; src < n; ++src) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<int> queue = {src};
        dist[static_cast<std::size_t>(src)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const int v = queue[head];
          for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
              dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
              queue.push_back(w);
            }
          }
        }
        for (int j = 0; j < n; ++j) {
          CHECK(dist[static_cast<std::size_t>(j)] ==
                sym_diff_size(g.vertices[static_cast<std::size_t>(src)],
                              g.vertices[static_cast<std::size_t>(j)]));
        }
      }
    }
  }
}

TEST_CASE("wiener_bfs values") {
  CHECK(wiener_bfs(build_hasse({1, 1})) == 2);
  CHECK(wiener_bfs(build_hasse({2, 2})) == 56);
  CHECK(wiener_bfs(build_hasse({1, 3})) == 20);
  CHECK(wiener_bfs(build_hasse({0, 4})) == 0);
}

TEST_CASE("parallel wiener agrees with the serial reference") {
  for (RectBound bound : {RectBound{3, 4}, RectBound{4, 4}, RectBound{2, 5}}) {
    const HasseGraph g = build_hasse(bound);
    CHECK(wiener_bfs(g) == serial::wiener_bfs(g));
  }
}

TEST_CASE("wiener_formula") {
  CHECK(wiener_formula(1, 1) == 2);
  CHECK(wiener_formula(2, 2) == 56);
  CHECK(wiener_formula(1, 3) == 20);
  for (int a = 1; a <= 10; ++a) {
    for (int b = 1; b <= 10; ++b) {
      CHECK(wiener_formula(a, b) == wiener_formula(b, a));
    }
  }
  CHECK_THROWS_AS(wiener_formula(0, 3), std::invalid_argument);
}

TEST_CASE("wiener triple agreement") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const BigInt formula = wiener_formula(a, b);
      CHECK(formula == wiener_bfs(build_hasse({a, b})));
      CHECK(formula == sum_sym_diff({a, b}, {a, b}));
    }
  }
}

TEST_CASE("vertex cap is enforced") {
  CHECK_THROWS_AS(build_hasse({10, 10}, 100), CapExceeded);
  CHECK_NOTHROW(build_hasse({2, 2}, 6));
}

TEST_CASE("disconnected graph is rejected") {
  HasseGraph g;
  g.bound = {1, 1};
  g.vertices = {Partition(), Partition({1})};
  g.adjacency = {{}, {}};  // deliberately missing the edge
  CHECK_THROWS_AS(wiener_bfs(g), std::logic_error);
  CHECK_THROWS_AS(serial::wiener_bfs(g), std::logic_error);
}
