#pragma once

#include <exception>
#include <string>
#include <unordered_set>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "satake/error.hpp"

namespace satake {

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Closure of {id} under right multiplication by generators. Level-synchronous
// BFS; the parallel variant expands each frontier across threads and merges
// serially, so both variants return the same element order.
template <class M, class KeyFn>
std::vector<M> closure_bfs(const M& id, const std::vector<M>& gens, std::size_t cap, KeyFn key, bool parallel,
                           Errc overflow = Errc::BeyondBruteForce) {
  std::vector<M> all{id};
  std::unordered_set<std::string> seen{key(id)};
  std::vector<M> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::pair<std::string, M>>> out(frontier.size());
    auto expand = [&](std::size_t k) {
      auto& slot = out[k];
      slot.reserve(gens.size());
      for (const M& g : gens) {
        M p = frontier[k] * g;
        slot.emplace_back(key(p), std::move(p));
      }
    };
    if (parallel && frontier.size() > 64) {
      const long n = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(static)
      for (long k = 0; k < n; ++k) expand(static_cast<std::size_t>(k));
    } else {
      for (std::size_t k = 0; k < frontier.size(); ++k) expand(k);
    }
    std::vector<M> next;
    for (auto& slot : out)
      for (auto& [k, m] : slot)
        if (seen.insert(k).second) {
          if (all.size() >= cap) throw Error(overflow, "group order exceeds budget " + std::to_string(cap));
          all.push_back(m);
          next.push_back(std::move(m));
        }
    frontier = std::move(next);
  }
  return all;
}

// Ordered parallel map: results keep input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& in, F f, bool parallel = true) {
  using R = decltype(f(in[0]));
  std::vector<R> out(in.size());
  if (parallel) {
    // Exceptions cannot cross the OpenMP region; park them and rethrow the first.
    std::vector<std::exception_ptr> err(in.size());
    const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
      try {
        out[k] = f(in[k]);
      } catch (...) {
        err[k] = std::current_exception();
      }
    }
    for (auto& e : err)
      if (e) std::rethrow_exception(e);
  } else {
    for (std::size_t k = 0; k < in.size(); ++k) out[k] = f(in[k]);
  }
  return out;
}

}  // namespace satake
