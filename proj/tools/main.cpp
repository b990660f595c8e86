#include <string>
#include <vector>

#include "haarrep/cli.hpp"

int main(int argc, char** argv) {
  return hgr::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
