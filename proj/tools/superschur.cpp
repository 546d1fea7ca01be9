#include <string>
#include <vector>

#include "superschur/cli.hpp"

int main(int argc, char** argv) {
  return superschur::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
