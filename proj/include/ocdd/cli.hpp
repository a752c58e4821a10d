#pragma once

namespace ocdd::cli {

/// Command-line front end. Exit codes: 0 on success (including runs that
/// stop at the iteration cap), 1 on usage or input errors, 2 when an
/// iteration run ends with a divergence verdict.
int run_main(int argc, char** argv);

} // namespace ocdd::cli
