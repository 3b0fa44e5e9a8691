#include "epile/cli.hpp"

int main(int argc, char** argv) { return epile::cli::run(argc, argv); }
