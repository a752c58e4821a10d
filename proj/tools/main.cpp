#include "ocdd/cli.hpp"

int main(int argc, char** argv) { return ocdd::cli::run_main(argc, argv); }
