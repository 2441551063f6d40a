#include "hypgrp/execution.hpp"

#include <exception>
#include <vector>

#include <omp.h>

namespace hypgrp {

  void set_thread_limit(int threads) {
    if (threads > 0) {
      omp_set_num_threads(threads);
    }
  }

  void for_each_index(Execution                               execution,
                      std::size_t                             n,
                      std::function<void(std::size_t)> const& fn) {
    std::vector<std::exception_ptr> errors(n);
    auto const count = static_cast<std::ptrdiff_t>(n);
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
          fn(static_cast<std::size_t>(i));
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    } else {
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
          fn(static_cast<std::size_t>(i));
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

}  // namespace hypgrp
