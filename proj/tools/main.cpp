#include <iostream>
#include <string>
#include <vector>

#include "coopet/cli_app.hpp"

int main(int argc, char** argv) {
  return coopet::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                         std::cerr);
}
