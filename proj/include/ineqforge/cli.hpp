#pragma once

namespace ineq::cli {

/// Entry point: 0 on pass, 1 on verification failure, 2 on usage or accuracy
/// error.
int run(int argc, const char* const* argv);

}
