#include <iostream>
#include <string>
#include <vector>

#include "extprob/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out, err;
  const int code = extprob::cli::run(args, out, err);
  std::cout << out;
  std::cerr << err;
  return code;
}
