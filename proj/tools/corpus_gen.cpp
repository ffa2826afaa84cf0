// Regenerates the bundled corpus from the family constructors.
// Usage: corpus-gen [OUTPUT_DIR]   (default: corpus)

#include <cstdio>
#include <filesystem>
#include <string>

#include "leibniz/corpus.hpp"
#include "leibniz/io.hpp"

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "corpus";
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::fprintf(stderr, "cannot create %s: %s\n", dir.c_str(), ec.message().c_str());
    return 2;
  }

  try {
    for (const auto& ent : leibniz::corpus_manifest()) {
      const std::string path = dir + "/" + ent.filename;
      leibniz::save_algebra(ent.doc, path);
      std::printf("wrote %s\n", path.c_str());
    }
    const std::string bad = dir + "/bad_table.json";
    leibniz::save_algebra(leibniz::corpus_bad_table(), bad);
    std::printf("wrote %s\n", bad.c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
