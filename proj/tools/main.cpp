#include "hyperbits/cli.hpp"

int main(int argc, char** argv) { return hyperbits::cli::main_entry(argc, argv); }
