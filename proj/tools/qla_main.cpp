#include "qla/harness/cli.hpp"

int main(int argc, char** argv) {
  return qla::harness::cli_main(argc, argv);
}
