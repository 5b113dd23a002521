#include "emdpoly/hasse.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "emdpoly/log.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace emdpoly {

namespace {

// Distinct partitions reachable from p by adding one box inside the bound.
std::vector<Partition> single_box_additions(const Partition& p, RectBound bound) {
  std::vector<Partition> out;
  const int len = p.length();
  for (int row = 0; row < len; ++row) {
    if (p.part(row) < bound.cols && (row == 0 || p.part(row - 1) > p.part(row))) {
      std::vector<int> parts = p.parts();
      ++parts[static_cast<std::size_t>(row)];
      out.push_back(Partition(std::move(parts)));
    }
  }
  if (len < bound.rows && bound.cols >= 1) {
    std::vector<int> parts = p.parts();
    parts.push_back(1);
    out.push_back(Partition(std::move(parts)));
  }
  return out;
}

// Sum of BFS distances from src; -1 if the graph is disconnected.
long long bfs_distance_sum(const HasseGraph& g, int src, std::vector<int>& dist,
                           std::vector<int>& queue) {
  const int n = static_cast<int>(g.vertices.size());
  dist.assign(static_cast<std::size_t>(n), -1);
  queue.clear();
  queue.push_back(src);
  dist[static_cast<std::size_t>(src)] = 0;
  long long total = 0;
  int seen = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    total += dist[static_cast<std::size_t>(v)];
    for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
        ++seen;
      }
    }
  }
  return seen == n ? total : -1;
}

}  // namespace

HasseGraph build_hasse(RectBound bound, unsigned long long max_vertices) {
  const BigInt count = binomial(bound.rows + bound.cols, bound.rows);
  if (count > max_vertices) {
    throw CapExceeded("build_hasse: |Par(" + std::to_string(bound.rows) + "x" +
                      std::to_string(bound.cols) + ")| = " + count.str() +
                      " exceeds the cap of " + std::to_string(max_vertices) +
                      " vertices (raise --max-vertices)");
  }
  HasseGraph g;
  g.bound = bound;
  g.vertices = enumerate_partitions(bound);  // sorted, so index lookup is a bisect
  g.adjacency.resize(g.vertices.size());
  for (std::size_t idx = 0; idx < g.vertices.size(); ++idx) {
    for (const Partition& up : single_box_additions(g.vertices[idx], bound)) {
      const auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), up);
      const int j = static_cast<int>(it - g.vertices.begin());
      g.adjacency[idx].push_back(j);
      g.adjacency[static_cast<std::size_t>(j)].push_back(static_cast<int>(idx));
    }
  }
  for (auto& neighbors : g.adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
  }
  return g;
}

BigInt wiener_bfs(const HasseGraph& g) {
#ifndef _OPENMP
  return serial::wiener_bfs(g);
#else
  const int n = static_cast<int>(g.vertices.size());
  if (log_enabled(LogLevel::kDebug)) {
    log_line(LogLevel::kDebug, "wiener_bfs: " + std::to_string(n) +
                                   " sources on " +
                                   std::to_string(omp_get_max_threads()) +
                                   " threads");
  }
  std::vector<BigInt> partials(static_cast<std::size_t>(omp_get_max_threads()));
  std::atomic<bool> disconnected{false};
#pragma omp parallel
  {
    std::vector<int> dist;
    std::vector<int> queue;
    BigInt local = 0;
#pragma omp for schedule(dynamic, 16) nowait
    for (int src = 0; src < n; ++src) {
      const long long sum = bfs_distance_sum(g, src, dist, queue);
      if (sum < 0) {
        disconnected.store(true, std::memory_order_relaxed);
      } else {
        local += sum;
      }
    }
    partials[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  if (disconnected.load()) {
    throw std::logic_error("wiener_bfs: graph is disconnected");
  }
  BigInt total = 0;
  for (const BigInt& p : partials) {
    total += p;
  }
  return total;
#endif
}

namespace serial {

BigInt wiener_bfs(const HasseGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> dist;
  std::vector<int> queue;
  BigInt total = 0;
  for (int src = 0; src < n; ++src) {
    const long long sum = bfs_distance_sum(g, src, dist, queue);
    if (sum < 0) {
      throw std::logic_error("wiener_bfs: graph is disconnected");
    }
    total += sum;
  }
  return total;
}

}  // namespace serial

BigInt wiener_formula(long long a, long long b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("wiener_formula: a and b must be positive");
  }
  const BigInt numer = BigInt(a) * b * binomial(2 * a + 2 * b + 2, 2 * a + 1);
  const BigInt divisor = 4 * a + 4 * b + 2;
  if (numer % divisor != 0) {
    throw std::logic_error("wiener_formula: result not integral");
  }
  return numer / divisor;
}

}  // namespace emdpoly
