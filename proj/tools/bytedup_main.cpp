#include "bytedup/cli.hpp"

int main(int argc, char** argv) { return bytedup::cli::cli_main(argc, argv); }
