#include "motzhank/cli.hpp"

int main(int argc, char** argv) { return motzhank::run(argc, argv); }
