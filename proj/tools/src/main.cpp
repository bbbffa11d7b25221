#include "app.hpp"

#include <iostream>

int main(int argc, char** argv) { return dsbo::app::run(argc, argv, std::cout, std::cerr); }
