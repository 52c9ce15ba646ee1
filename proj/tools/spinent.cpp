#include <iostream>
#include <string>
#include <vector>

#include "spinent/app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return spinent::main_entry(args, std::cout, std::cerr);
}
