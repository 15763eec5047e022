#include "ditri/cliapp.hpp"

int main(int argc, char** argv) { return ditri::run_cli_main(argc, argv); }
