#include "ineqforge/cli.hpp"

int main(int argc, char** argv) { return ineq::cli::run(argc, argv); }
