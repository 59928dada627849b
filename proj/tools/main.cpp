#include "arch_resonance/cli.hpp"

int main(int argc, char** argv) { return arch_resonance::cli::main_entry(argc, argv); }
