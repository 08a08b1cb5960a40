#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "aspnf/text_io.hpp"

inline std::string data_path(const std::string& name) { return std::string(ASPNF_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline aspnf::Program load_program(const std::string& name) { return aspnf::parse_program(read_data(name)); }

inline aspnf::Program prog(std::string_view text) {
  return aspnf::parse_program(text, {.allow_reserved = true});
}

inline aspnf::AtomSet atoms(std::string_view text) {
  return aspnf::parse_atom_list(text, {.allow_reserved = true});
}
