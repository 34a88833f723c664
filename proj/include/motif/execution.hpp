#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <utility>

#include "motif/errors.hpp"

namespace motif {

/// Optional wall-clock deadline shared by every part of one solve.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  static Budget unlimited() { return Budget{}; }
  static Budget seconds(double s) {
    Budget b;
    b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(s));
    return b;
  }

  bool limited() const { return deadline_.has_value(); }
  bool expired() const { return deadline_ && Clock::now() >= *deadline_; }

  /// Throws BudgetExceeded past the deadline.
  void check() const {
    if (expired()) throw BudgetExceeded();
  }

 private:
  std::optional<Clock::time_point> deadline_;
};

/// Thread count for a new parallel region: MOTIF_KIT_THREADS when set to a
/// positive integer, otherwise the OpenMP default.
int omp_threads_default();

enum class Execution { serial, parallel };

struct ExecutionContext {
  Budget budget;
  Execution mode = Execution::parallel;
  int threads = 0;  // 0: OpenMP default
};

/// Evaluates f(0), f(1), ... and returns the result of the smallest index
/// whose f returned a value. The parallel path hands indices out dynamically
/// and skips every index above the best one found so far, so it returns
/// exactly what the serial loop returns. An exception thrown by f(i) is
/// rethrown if no smaller index succeeded.
template <typename R, typename F>
std::optional<R> first_success(std::size_t count, const ExecutionContext& ctx, F&& f) {
  if (ctx.mode == Execution::serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      ctx.budget.check();
      if (std::optional<R> r = f(i)) return r;
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> best{count};
  std::optional<R> result;
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
  const int threads = ctx.threads;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : omp_threads_default())
  for (std::int64_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    std::optional<R> r;
    std::exception_ptr e;
    try {
      ctx.budget.check();
      r = f(i);
    } catch (...) {
      e = std::current_exception();
    }
    if (r || e) {
#pragma omp critical(motif_first_success)
      {
        if (i < best.load(std::memory_order_relaxed)) {
          best.store(i, std::memory_order_relaxed);
          result = std::move(r);
          error = e;
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return result;
}

}  // namespace motif
