#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include "broken_crown/cli.hpp"

int main(int argc, char* argv[]) {
  std::ios::sync_with_stdio(false);
  const char* color_env = std::getenv("BC_COLOR");
  const bool color = isatty(STDERR_FILENO) && !(color_env && std::string_view(color_env) == "0");
  std::vector<std::string> args(argv + 1, argv + argc);
  return broken_crown::cli::cli_main(std::move(args), {std::cin, std::cout, std::cerr, color});
}
