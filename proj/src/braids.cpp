#include "ttkh/braids.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <sstream>

#include "ttkh/errors.hpp"

namespace ttkh {

std::vector<std::array<int, 4>> braid_closure(int strands, const std::vector<int>& word) {
  std::vector<int> at(strands);
  int next = 1;
  for (int j = 0; j < strands; ++j) at[j] = next++;
  const std::vector<int> bottom = at;
  std::vector<std::array<int, 4>> tuples;
  for (int g : word) {
    int i = std::abs(g) - 1;
    if (i < 0 || i + 1 >= strands) throw Error(ErrorKind::MalformedToken, "braid generator " + std::to_string(g) + " out of range");
    int x_in = at[i];
    int y_in = at[i + 1];
    int out_left = next++;
    int out_right = next++;
    if (g > 0) {
      tuples.push_back({y_in, out_right, out_left, x_in});
    } else {
      tuples.push_back({x_in, y_in, out_right, out_left});
    }
    at[i] = out_left;
    at[i + 1] = out_right;
  }
  std::map<int, int> rename;
  for (int j = 0; j < strands; ++j) rename[at[j]] = bottom[j];
  for (auto& t : tuples) {
    for (int& e : t) {
      auto it = rename.find(e);
      if (it != rename.end()) e = it->second;
    }
  }
  return tuples;
}

std::vector<int> torus_braid(int p, int q) {
  std::vector<int> word;
  for (int r = 0; r < q; ++r) {
    for (int i = 1; i < p; ++i) word.push_back(i);
  }
  return word;
}

std::vector<int> parse_braid(const std::string& text) {
  std::string clean = text;
  for (char& ch : clean) {
    if (ch == ',' || ch == '[' || ch == ']' || ch == '{' || ch == '}') ch = ' ';
  }
  std::istringstream in(clean);
  std::vector<int> word;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || g == 0) throw Error(ErrorKind::MalformedToken, "bad braid generator '" + tok + "'");
    word.push_back(g);
  }
  return word;
}

}  // namespace ttkh
