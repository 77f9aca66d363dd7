#include <iostream>

#include "dl/cli.hpp"

int main(int argc, char** argv) {
  return dl::run_command_line(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
