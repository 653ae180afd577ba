#include <vector>

#include "geolab/cli.hpp"

int main(int argc, char** argv) {
  return geolab::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
