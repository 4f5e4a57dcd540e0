#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace rml {

/// Worker count: hardware concurrency, capped by the RML_THREADS variable.
unsigned worker_count();

/// Evaluates fn(0..count-1) on up to worker_count() threads; results are
/// returned in index order so downstream folds stay deterministic.  The
/// first exception (lowest index) is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const unsigned workers = std::min<std::size_t>(worker_count(), count);
  auto run = [&](unsigned w) {
    for (std::size_t j = w; j < count; j += workers) {
      try {
        slots[j].emplace(fn(j));
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace rml
