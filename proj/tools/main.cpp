#include "gburgers/cli.hpp"

int main(int argc, char** argv) {
    return gburgers::cli::run_cli(argc, argv);
}
