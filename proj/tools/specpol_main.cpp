#include "specpol/cli_app.hpp"

int main(int argc, char** argv) {
    return specpol::run_cli(argc, argv);
}
