#include <iostream>

#include "ilseq/cli.hpp"

int main(int argc, char** argv) {
  return ilseq::run_cli(argc, argv, std::cout, std::cerr);
}
