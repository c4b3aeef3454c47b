#include "centro/cli.hpp"

int main(int argc, char** argv) { return centro::cli::run(argc, argv); }
