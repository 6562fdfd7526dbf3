#include "motion/sequence.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace motion {

namespace fs = std::filesystem;

SequenceSource SequenceSource::from_directory(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw std::runtime_error("not a directory: " + dir.string());
    }
    SequenceSource source;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
            source.paths_.push_back(entry.path());
        }
    }
    std::sort(source.paths_.begin(), source.paths_.end(),
              [](const fs::path& a, const fs::path& b) {
                  return a.filename().string() < b.filename().string();
              });
    return source;
}

SequenceSource SequenceSource::from_manifest(const fs::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest.string());

    const fs::path base = manifest.parent_path();
    SequenceSource source;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        if (line.empty()) continue;
        fs::path entry(line);
        source.paths_.push_back(entry.is_absolute() ? entry : base / entry);
    }
    return source;
}

SequenceSource SequenceSource::open(const fs::path& path) {
    if (fs::is_directory(path)) return from_directory(path);
    if (fs::is_regular_file(path)) return from_manifest(path);
    throw std::runtime_error("input not found: " + path.string());
}

}  // namespace motion
