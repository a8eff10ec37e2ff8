#include <iostream>

#include "invmetrics/cli.hpp"

int main(int argc, char** argv) {
  return invmetrics::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
