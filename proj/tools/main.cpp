#include "cli.hpp"

int main(int argc, char** argv) { return johnson::cli::run(argc, argv); }
