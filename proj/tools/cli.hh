#ifndef RELFROB_TOOLS_CLI_HH
#define RELFROB_TOOLS_CLI_HH 1

#include <ostream>

namespace relfrob
{
    /// The command-line tool. JSON reports go to out, human summaries and
    /// errors to err. Returns 0 when the checked property holds, 1 when it
    /// fails, and 2 for malformed input or usage errors.
    auto relfrob_main(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
