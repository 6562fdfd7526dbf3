#pragma once

#include <filesystem>
#include <vector>

namespace motion {

// An ordered list of frame files: either every *.pgm in a directory sorted
// lexicographically by filename, or the lines of a manifest file (relative
// paths resolve against the manifest's directory).
class SequenceSource {
public:
    static SequenceSource from_directory(const std::filesystem::path& dir);
    static SequenceSource from_manifest(const std::filesystem::path& manifest);

    // Dispatches on whether the path is a directory.
    static SequenceSource open(const std::filesystem::path& path);

    const std::vector<std::filesystem::path>& paths() const { return paths_; }
    std::size_t size() const { return paths_.size(); }
    bool empty() const { return paths_.empty(); }

private:
    std::vector<std::filesystem::path> paths_;
};

}  // namespace motion
