#include <iostream>
#include <variant>

#include "polygcd/cli.hpp"

int main(int argc, char** argv) {
  auto parsed = polygcd::cli::parse_command_line(argc, argv, std::cout, std::cerr);
  if (const int* status = std::get_if<int>(&parsed)) return *status;
  return polygcd::cli::run(std::get<polygcd::cli::CliConfig>(parsed), std::cout, std::cerr,
                           std::cin);
}
