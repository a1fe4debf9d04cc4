#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmgroups/vhdatum.hpp"
#include "bmgroups/zmatrix.hpp"

namespace fixtures {

inline std::string data_path(std::string const& name) {
  return std::string(BMG_TEST_DATA) + "/" + name;
}

inline std::string read(std::string const& name) {
  std::ifstream in(data_path(name));
  if (!in) {
    throw std::runtime_error("missing fixture " + name);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline bmg::VHDatum datum(std::string const& name) {
  return bmg::parse_datum(read(name + ".txt"));
}

inline bmg::BMDatum bm(std::string const& name) {
  return bmg::BMDatum::from(datum(name));
}

inline std::vector<std::string> sample_names() {
  return {"2x2.01", "2x2.36", "2x2.37", "2x2.38", "2x2.41"};
}

struct TableEntry {
  std::string name;
  bmg::VHDatum datum;
  std::string H1;
  std::string C;
};

inline std::string trim(std::string s) {
  auto const b = s.find_first_not_of(' ');
  auto const e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// The 52 rows of the 4x4 classification table.
inline std::vector<TableEntry> table_4x4() {
  std::istringstream in(read("table_4x4.txt"));
  std::vector<TableEntry> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, '|')) parts.push_back(trim(f));
    std::string text = "4 4\n" + parts[1];
    for (auto& c : text) {
      if (c == ';') c = '\n';
    }
    rows.push_back({parts[0], bmg::parse_datum(text), parts[2], parts[3]});
  }
  return rows;
}

}  // namespace fixtures
