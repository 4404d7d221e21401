#pragma once

#include <array>
#include <string>
#include <vector>

namespace ttkh {

// PD tuples of the closure of a braid word on `strands` strands; generator
// +i is sigma_i (positive crossing), -i its inverse.  Strands run upward.
std::vector<std::array<int, 4>> braid_closure(int strands, const std::vector<int>& word);

// (sigma_1 ... sigma_{p-1})^q, the standard diagram of T(q, p).
std::vector<int> torus_braid(int p, int q);

// Integers separated by commas or spaces, optionally in brackets.
std::vector<int> parse_braid(const std::string& text);

}  // namespace ttkh
