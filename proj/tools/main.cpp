#include "sompkit/cli.hpp"

int main(int argc, char** argv) { return sompkit::cli_main(argc, argv); }
