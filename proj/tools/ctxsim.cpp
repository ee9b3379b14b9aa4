#include <iostream>

#include "ctxsim/cli.hpp"
#include "ctxsim/logging.hpp"

int main(int argc, char** argv) {
  ctxsim::configure_logging();
  return ctxsim::run_cli(argc, argv, std::cout, std::cerr);
}
