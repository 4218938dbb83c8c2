#include <vector>

#include "spinchain/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spinchain::cli::run(std::move(args));
}
