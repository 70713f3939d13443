#ifndef RELFROB_ERRORS_HH
#define RELFROB_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace relfrob
{
    /// Malformed or inconsistent user input: dangling ids, bad schema, failed
    /// structural axioms of a constructor's source data. The CLI maps this to
    /// exit code 2.
    class InputError : public std::runtime_error
    {
        public:
            explicit InputError(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };
}

#endif
