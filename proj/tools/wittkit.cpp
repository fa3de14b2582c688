#include "wittkit/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = wittkit::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
