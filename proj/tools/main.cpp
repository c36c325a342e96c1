// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli/app.hpp"

int main(int argc, char** argv) { return chessfad::cli::run(argc, argv, std::cout, std::cerr); }
