#pragma once

// Every data-parallel kernel has a serial reference path selected by this
// flag; both produce identical results.

#include <cstddef>
#include <functional>

namespace hypgrp {

  enum class Execution { Serial, Parallel };

  // Caps the OpenMP worker count; 0 leaves the runtime default.
  void set_thread_limit(int threads);

  // Runs fn(0) .. fn(n-1), in parallel under Execution::Parallel with a
  // dynamic schedule. If any calls throw, the exception of the lowest index
  // is rethrown after all calls finish.
  void for_each_index(Execution                               execution,
                      std::size_t                             n,
                      std::function<void(std::size_t)> const& fn);

}  // namespace hypgrp
