#include <iostream>

#include "srpb/cli/app.hpp"

int main(int argc, char** argv)
{
    return srpb::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
