#include <iostream>
#include <iterator>

#include "motivic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto read_stdin = [] {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  };
  const auto result = motivic::cli::run(args, read_stdin);
  std::cout << result.output;
  return result.status;
}
