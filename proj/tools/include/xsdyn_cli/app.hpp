#pragma once

#include <ostream>

namespace xsdyn::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitPhysics = 3,
  kExitIo = 4,
};

/// Entry point of the `xsdyn` executable. Output that is not sent to a file
/// goes to `out`; diagnostics go to `err`. Returns one of ExitCode.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xsdyn::cli
