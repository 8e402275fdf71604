#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "newton_certify/cli.hpp"

int main(int argc, char** argv) {
  unsigned long long seed = 0;
  if (const char* env = std::getenv("NEWTON_CERTIFY_SEED")) {
    try {
      std::size_t used = 0;
      seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cout << R"({"error":"NEWTON_CERTIFY_SEED must be a nonnegative integer"})" << '\n';
      return 2;
    }
  }
  return newton_certify::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, seed);
}
