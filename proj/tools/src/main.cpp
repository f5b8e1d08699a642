#include <iostream>

#include "hopfcheck/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto res = hopfcheck::cli::run(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
