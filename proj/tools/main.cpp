#include "urlab/cli.hpp"

int main(int argc, char** argv) { return urlab::cli::run(argc, argv); }
