#include "hqg/cli.hpp"

int main(int argc, char** argv) { return hqg::cli::run(argc, argv); }
