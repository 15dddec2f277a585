#include <iostream>

#include "bturan/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return bturan::cli::run(argc, argv, {std::cin, std::cout, std::cerr});
}
