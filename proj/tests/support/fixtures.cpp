#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cotrans/oracle.hpp"

namespace fixtures {

namespace fs = std::filesystem;

fs::path data_path(const std::string& relative) { return fs::path(COTRANS_TEST_DATA) / relative; }

std::string read_text(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cotrans::grz::GraphFile load(const std::string& relative) {
  return cotrans::grz::parse_graph_file(read_text(data_path(relative)));
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(data_path("corpus")))
    if (entry.path().extension() == ".proof") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

cotrans::grz::Graph searched(const std::string& sequent, std::size_t height, std::size_t states) {
  auto found = cotrans::grz::search(cotrans::grz::parse_sequent(sequent), {height, states, std::nullopt});
  if (!found) throw std::runtime_error("no proof found for " + sequent);
  return *found;
}

}  // namespace fixtures
