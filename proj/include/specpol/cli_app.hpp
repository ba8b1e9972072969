#pragma once

namespace specpol {

/// Entry point of the specpol command line tool.
/// Exit codes: 0 on success (and for checks that hold), 1 when a checked
/// property fails (nonzero residual, a recurrence step failure, a non-integer
/// Somos term under --expect-integral, an ODE residual that is not zero),
/// 2 on usage, parse or input errors.
int run_cli(int argc, const char* const* argv);

}  // namespace specpol
