#pragma once

// Runs the CLI in-process on the cases listed in golden/cases.txt and
// compares stdout byte for byte with golden/<name>.out.

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "lozenge/cli.hpp"

namespace lozenge::test {

struct GoldenCase {
  std::string name;
  int exit_code;
  std::string input;
  std::vector<std::string> args;
};

struct GoldenOutcome {
  std::string name;
  bool passed;
  std::string detail;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<GoldenCase> golden_cases(const std::string& dir) {
  std::vector<GoldenCase> out;
  std::istringstream lines(read_file(dir + "/cases.txt"));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    GoldenCase c;
    words >> c.name >> c.exit_code >> c.input;
    for (std::string w; words >> w;) c.args.push_back(w);
    out.push_back(std::move(c));
  }
  return out;
}

inline GoldenOutcome run_golden(const std::string& dir, const GoldenCase& c) {
  std::vector<std::string> args{"lozenge"};
  args.insert(args.end(), c.args.begin(), c.args.end());
  args.push_back(dir + "/" + c.input);
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in;
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  if (code != c.exit_code)
    return {c.name, false, "exit " + std::to_string(code) + ", expected " + std::to_string(c.exit_code)};
  if (out.str() != read_file(dir + "/" + c.name + ".out")) return {c.name, false, "stdout differs from golden file"};
  return {c.name, true, ""};
}

}  // namespace lozenge::test
