// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "rosenthal/cli.hpp"

int main(int argc, char** argv) { return rosenthal::cli::run(argc, argv, std::cout, std::cerr); }
