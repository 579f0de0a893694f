#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const auto config = eemd::cli::parse_config(args);
    return eemd::cli::run(config, std::cerr);
  } catch (const eemd::cli::UsageError& e) {
    (e.status() == eemd::cli::kSuccess ? std::cout : std::cerr) << e.what() << '\n';
    return e.status();
  }
}
