#pragma once

namespace labcount {

// Worker cap for OpenMP regions. Reads LABCOUNT_THREADS on every call (a
// positive integer caps parallelism); otherwise the OpenMP default. All
// parallel kernels produce totals and reports identical to serial runs.
int thread_budget();

}  // namespace labcount
