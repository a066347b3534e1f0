#include <string>
#include <vector>

#include "josephson/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return josephson::cli::main_entry(args);
}
