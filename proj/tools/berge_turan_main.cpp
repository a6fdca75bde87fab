#include "berge_turan/cli.hpp"

int main(int argc, char** argv) { return berge_turan::cli_dispatch(argc, argv); }
