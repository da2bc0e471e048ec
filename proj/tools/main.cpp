#include <iostream>

#include "fracdisp/cli/app.hpp"

int main(int argc, char** argv) { return fracdisp::cli::run_app(argc, argv, std::cout, std::cerr); }
