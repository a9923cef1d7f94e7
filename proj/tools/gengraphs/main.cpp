#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "domfix/graph6.hpp"
#include "enumerate.hpp"

// Emits connected_<n>.g6 corpus files, one sorted graph6 line per
// isomorphism class of connected graphs.
int main(int argc, char** argv) {
  CLI::App app{"small-graph corpus generator"};
  int max_n = 7;
  std::string outdir = ".";
  app.add_option("--max", max_n, "largest order to enumerate")
      ->check(CLI::Range(1, 9));
  app.add_option("--outdir", outdir, "output directory");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(outdir);
  auto levels = gengraphs::enumerate_all(max_n);

  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::string> lines;
    for (uint64_t code : levels[n])
      if (gengraphs::code_connected(n, code))
        lines.push_back(domfix::write_graph6(gengraphs::decode(n, code)));
    std::sort(lines.begin(), lines.end());

    auto path = std::filesystem::path(outdir) / ("connected_" + std::to_string(n) + ".g6");
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    for (const auto& l : lines) out << l << "\n";
    std::cerr << "n=" << n << ": " << levels[n].size() << " graphs, "
              << lines.size() << " connected\n";
  }
  return 0;
}
