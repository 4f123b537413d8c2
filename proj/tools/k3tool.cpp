#include "k3/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return k3::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
