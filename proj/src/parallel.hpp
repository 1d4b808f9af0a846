#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace qchrom {

/// Worker count: explicit request, else QCHROM_WORKERS, else 1.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QCHROM_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

/// Deterministic parallel map: results land in input order, so reductions
/// over the output are independent of the worker count.
template <class In, class Out>
std::vector<Out> parallel_map(const std::vector<In>& items, const std::function<Out(const In&)>& f,
                              int workers) {
  workers = resolve_workers(workers);
  std::vector<Out> out(items.size());
  if (workers <= 1 || items.size() <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < items.size();
             i += static_cast<std::size_t>(workers))
          out[i] = f(items[i]);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

} // namespace qchrom
