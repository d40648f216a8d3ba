// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_TESTS_SCRATCH_DIR_HPP
#define WAVECAUCHY_TESTS_SCRATCH_DIR_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir
{
public:
  explicit ScratchDir(const std::string &tag)
    : path_(std::filesystem::temp_directory_path() /
            ("wavecauchy_" + tag + "_" + std::to_string(::getpid())))
  {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() { std::filesystem::remove_all(path_); }
  ScratchDir(const ScratchDir &) = delete;
  ScratchDir &operator=(const ScratchDir &) = delete;

  const std::filesystem::path &Path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

private:
  std::filesystem::path path_;
};

inline std::string Slurp(const std::filesystem::path &p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

#endif  // WAVECAUCHY_TESTS_SCRATCH_DIR_HPP
