#include <iostream>

#include "ef/cli.hpp"

int main(int argc, char** argv) {
  return ef::cli_main(argc, argv, std::cout, std::cerr);
}
