#include <bicyclic/cli.hpp>

int main(int argc, char** argv) { return bicyclic::cli::run(argc, argv); }
