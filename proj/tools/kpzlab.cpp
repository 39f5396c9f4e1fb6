#include "kpzlab/cli.hpp"

int main(int argc, char** argv) { return kpzlab::run_cli(argc, argv); }
