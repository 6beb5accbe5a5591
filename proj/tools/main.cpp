#include <iostream>

#include "durfee_cli.hpp"

int main(int argc, char** argv)
{
    return durfee::cli::run(argc, argv, std::cout, std::cerr);
}
