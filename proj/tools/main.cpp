#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  return linthresh::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
