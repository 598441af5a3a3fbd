#include "cli.hpp"

int main(int argc, char** argv) {
  return opinion::cli::main_with_args(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
