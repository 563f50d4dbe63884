#include <string>
#include <vector>

#include "ponsim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ponsim::cli_main(args);
}
