#include "dcl/cli.hpp"

int main(int argc, char** argv) { return dcl::run_cli(argc, argv); }
