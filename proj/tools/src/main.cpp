#include <iostream>

#include "xsdyn_cli/app.hpp"

int main(int argc, char** argv) { return xsdyn::cli::run_app(argc, argv, std::cout, std::cerr); }
