// Reads a CSV file, parses it into a table and writes it back to stdout.
#include <fstream>
#include <iostream>
#include <sstream>

#include "table.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: csv_roundtrip FILE\n";
    return 2;
  }
  std::ifstream in(argv[1], std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << argv[1] << '\n';
    return 2;
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    umbralqm::write_csv(std::cout, umbralqm::parse_csv(text.str()));
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
