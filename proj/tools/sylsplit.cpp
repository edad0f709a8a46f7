#include <sylsplit/cli.hpp>

int main(int argc, char** argv) { return sylsplit::run_cli(argc, argv); }
