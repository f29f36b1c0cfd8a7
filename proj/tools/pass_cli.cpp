#include "pass/cli.hpp"

int main(int argc, char** argv) { return pass::cli_main(argc, argv); }
