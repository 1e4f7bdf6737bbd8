#include <iostream>

#include <specturan/cli.hpp>

int main(int argc, char** argv) {
    return specturan::cli_run(argc, argv, std::cout, std::cerr, std::cin);
}
