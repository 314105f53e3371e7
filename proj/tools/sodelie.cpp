#include <iostream>
#include <string>
#include <vector>

#include "sodelie/cli/commands.hpp"

int main(int argc, char** argv) {
  return sodelie::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
