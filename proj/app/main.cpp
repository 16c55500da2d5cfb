#include "zeroroot/cli.hpp"

int main(int argc, char** argv) { return zeroroot::run_cli(std::vector<std::string>(argv, argv + argc)); }
