#include "commands.hpp"

int main(int argc, char** argv) { return kerrqc::cli::main_entry(argc, argv); }
