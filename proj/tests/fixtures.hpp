#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "motivic/io.hpp"

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(MOTIVIC_FIXTURE_DIR) + "/" + name; }

inline motivic::ResolutionData load_resolution(const std::string& name) {
  return motivic::io::resolution_from_json(motivic::io::parse_json(read_file(fixture_path(name + ".json"))));
}
