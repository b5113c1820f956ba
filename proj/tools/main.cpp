#include <exception>
#include <iostream>

#include "sumorder/cli.hpp"

int main(int argc, char** argv) {
  try {
    return sumorder::run_cli(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
