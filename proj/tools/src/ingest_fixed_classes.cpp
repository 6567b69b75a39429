// Converts a Cremona allcurves-format export into the fixed_classes dataset.
//
//   tcl-ingest <allcurves.txt> [--source TAG] [-o out.txt]
//
// Input lines: N class number [a1,a2,a3,a4,a6] r |T|

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tcl/fixed_classes.hpp"

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

tcl::FixedCurve parse_allcurves_line(const std::string& line, const std::string& source) {
  std::istringstream ls(line);
  tcl::FixedCurve c;
  std::string cls, num, coeffs;
  if (!(ls >> c.conductor >> cls >> num >> coeffs) || coeffs.size() < 2 || coeffs.front() != '[' ||
      coeffs.back() != ']')
    throw tcl::error(tcl::errc::bad_dataset, "bad allcurves line: " + line);
  std::vector<tcl::i128> a;
  std::istringstream cs(coeffs.substr(1, coeffs.size() - 2));
  std::string tok;
  while (std::getline(cs, tok, ',')) a.push_back(tcl::parse_i128(tok));
  if (a.size() != 5) throw tcl::error(tcl::errc::bad_dataset, "expected 5 coefficients: " + line);
  c.label = std::to_string(c.conductor) + cls + num;
  c.model = {a[0], a[1], a[2], a[3], a[4], c.label, std::nullopt};
  c.source = source;
  tcl::weierstrass_invariants(c.model);  // rejects singular input
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build the fixed-class curve dataset from an allcurves export"};
  std::string input, output, source = "cremona-allcurves";
  app.add_option("input", input, "allcurves-format file")->required()->check(CLI::ExistingFile);
  app.add_option("-o,--output", output, "output path (default stdout)");
  app.add_option("--source", source, "source tag stored with every record");
  CLI11_PARSE(app, argc, argv);

  std::ifstream f(input, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string raw = buf.str();

  tcl::FixedClassDataset ds;
  ds.source_sha256 = sha256_hex(raw);
  std::istringstream lines(raw);
  std::string line;
  try {
    while (std::getline(lines, line)) {
      if (line.empty() || line[0] == '#') continue;
      ds.curves.push_back(parse_allcurves_line(line, source));
    }
  } catch (const tcl::error& e) {
    std::cerr << "tcl-ingest: " << e.what() << "\n";
    return 1;
  }

  std::string text = tcl::write_fixed_classes(ds);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream(output, std::ios::binary) << text;
  }
  std::cerr << "tcl-ingest: " << ds.curves.size() << " curves, sha256 " << ds.source_sha256 << "\n";
  return 0;
}
