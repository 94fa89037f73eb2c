#include "commands.hpp"

int main(int argc, char** argv) { return wof::cli::run(argc, argv); }
