#include <string>
#include <vector>

#include "oscp/cli.hpp"

int main(int argc, char** argv) {
  return oscp::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
