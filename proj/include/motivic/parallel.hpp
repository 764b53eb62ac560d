#pragma once

namespace motivic {

/// Execution policy for the data-parallel kernels. Exec::serial is the
/// reference path; both must produce identical results.
enum class Exec { serial, parallel };

/// Number of OpenMP threads available (1 without OpenMP).
int max_threads();

}  // namespace motivic
