#include "hypdet/cli.hpp"

int main(int argc, char** argv) { return hypdet::cli::main(argc, argv); }
