#include "nkicon/cli.hpp"

int main(int argc, char** argv) { return nkicon::run_cli(argc, argv); }
