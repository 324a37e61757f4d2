#pragma once

// Exhaustive axiom kernels. Each has a serial reference loop and an OpenMP
// version; both return identical, sorted reports.

#include <cstddef>

#include "bicrossed/hopf.hpp"

namespace bicrossed {

/// Caps the OpenMP worker count used by every parallel kernel (0 = default).
void set_max_jobs(int jobs);
int max_jobs();

/// Runs row(i, report) for i < n and merges the per-row reports, sorted.
template <class RowFn>
VerificationReport run_rows(std::size_t n, Exec exec, RowFn&& row) {
  VerificationReport total;
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) row(i, total);
  } else {
    const long count = static_cast<long>(n);
#pragma omp parallel num_threads(max_jobs())
    {
      VerificationReport local;
#pragma omp for schedule(dynamic, 1)
      for (long i = 0; i < count; ++i) row(static_cast<std::size_t>(i), local);
#pragma omp critical(bicrossed_merge)
      total.merge(local);
    }
  }
  total.sort();
  return total;
}

/// body(i) for i < n; bodies must only write to disjoint state.
template <class Body>
void parallel_for(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(max_jobs())
  for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

VerificationReport check_associativity(const HopfStructure& h, Exec exec);
VerificationReport check_unit_law(const HopfStructure& h);
VerificationReport check_coassociativity(const HopfStructure& h, Exec exec);
VerificationReport check_counit_law(const HopfStructure& h);
VerificationReport check_bialgebra(const HopfStructure& h, Exec exec);
VerificationReport check_antipode(const HopfStructure& h, Exec exec);

}  // namespace bicrossed
