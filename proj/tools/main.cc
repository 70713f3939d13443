#include "cli.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return relfrob::relfrob_main(argc, argv, std::cout, std::cerr);
}
