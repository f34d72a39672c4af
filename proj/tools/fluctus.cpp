// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return fluctus::cli::run(argc, argv, std::cout, std::cerr); }
