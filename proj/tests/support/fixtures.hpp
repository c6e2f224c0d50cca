#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cotrans/grz/io.hpp"
#include "cotrans/grz/proof.hpp"

namespace fixtures {

std::filesystem::path data_path(const std::string& relative);
std::string read_text(const std::filesystem::path& p);
cotrans::grz::GraphFile load(const std::string& relative);

// Sorted .proof files under tests/corpus.
std::vector<std::filesystem::path> corpus_files();

// Searched cut-free proof of `sequent`; throws if the search fails.
cotrans::grz::Graph searched(const std::string& sequent, std::size_t height = 8, std::size_t states = 6);

}  // namespace fixtures
