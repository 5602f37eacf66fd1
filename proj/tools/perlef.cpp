#include "perlef/cli.hpp"

int main(int argc, char** argv) { return perlef::cli::main(argc, argv); }
