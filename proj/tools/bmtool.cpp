#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmgroups/enumeration.hpp"
#include "bmgroups/mozes.hpp"
#include "bmgroups/report.hpp"
#include "bmgroups/tilingshift.hpp"
#include "bmgroups/vhdatum.hpp"

namespace {

using namespace bmg;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct Failure {
  int code;
  std::string message;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Failure{kUsage, "cannot read " + path};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

VHDatum load(std::string const& path) {
  try {
    return parse_datum(read_file(path));
  } catch (ParseError const& e) {
    throw Failure{kUsage, path + ":" + std::to_string(e.line) + ": " + e.what()};
  }
}

BMDatum load_valid(std::string const& path) {
  auto const raw = load(path);
  auto const report = validate(raw);
  if (!report.ok()) {
    throw Failure{kInvalid, report.to_string()};
  }
  return BMDatum::from(raw);
}

void write_file(std::filesystem::path const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Failure{kUsage, "cannot write " + path.string()};
  }
  out << text;
}

int cmd_validate(std::string const& file) {
  auto const raw = load(file);
  auto const report = validate(raw);
  std::cout << report.to_string();
  return report.ok() ? kOk : kInvalid;
}

int cmd_analyze(std::string const& file, bool json, int h3_bound) {
  auto const datum = load_valid(file);
  auto const report = analyze(datum, h3_bound);
  if (json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << to_text(report);
  }
  return kOk;
}

int cmd_enumerate(int m, int n, std::string const& mode_name, std::string const& out_dir,
                  bool table) {
  EquivalenceMode mode;
  try {
    mode = parse_mode(mode_name);
  } catch (std::invalid_argument const& e) {
    throw Failure{kUsage, e.what()};
  }
  std::vector<VHDatum> data;
  try {
    data = enumerate_relation_sets(m, n);
  } catch (std::invalid_argument const& e) {
    throw Failure{kUsage, e.what()};
  }
  auto const classes = classify(data, mode);
  std::cout << data.size() << " cliques, " << classes.size() << " classes\n";
  if (!table && out_dir.empty()) {
    return kOk;
  }
  auto const rows = emit_table(classes);
  if (table) {
    std::cout << table_text(rows);
  }
  if (!out_dir.empty()) {
    std::filesystem::path const dir(out_dir);
    std::filesystem::create_directories(dir);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto const& r = rows[i];
      write_file(dir / (r.name + ".txt"), serialize_datum(r.presentation));
      j.push_back({{"name", r.name},
                   {"orbit_size", classes[i].orbit_size},
                   {"presentation", presentation_text(r.presentation)},
                   {"H1", group_json(r.H1)},
                   {"C", group_json(r.C)}});
    }
    write_file(dir / "table.txt", table_text(rows));
    write_file(dir / "table.json", j.dump(2) + "\n");
  }
  return kOk;
}

int cmd_mozes(long long p, long long l, std::string const& out_file, bool run_analysis) {
  VHDatum datum;
  try {
    if (p == l) {
      throw std::invalid_argument("p and l must be distinct");
    }
    datum = mozes_datum(p, l);
  } catch (std::invalid_argument const& e) {
    throw Failure{kUsage, e.what()};
  }
  auto const text = serialize_datum(datum);
  if (out_file.empty() && !run_analysis) {
    std::cout << text;
  }
  if (!out_file.empty()) {
    write_file(out_file, text);
  }
  if (!run_analysis) {
    return kOk;
  }
  auto const report = validate(datum);
  if (!report.ok()) {
    std::cout << report.to_string();
    return kInvalid;
  }
  auto const analysis = analyze(BMDatum::from(datum));
  std::cout << to_text(analysis);
  auto const expected = conjectured_h1(p, l);
  bool const agree = expected == analysis.H1;
  std::cout << "conjectured H1      " << expected.to_string() << " (r=" << mozes_r(p, l) << ")\n"
            << (agree ? "AGREE" : "DISAGREE") << '\n';
  return kOk;
}

std::string join(LetterWord const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += (i == 0 ? "" : ",") + std::to_string(w[i]);
  }
  return out;
}

int cmd_nf(std::string const& file, std::string const& word_text) {
  auto const datum = load_valid(file);
  LetterWord word;
  std::stringstream in(word_text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) {
      continue;
    }
    try {
      std::size_t used = 0;
      word.push_back(std::stoi(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (std::exception const&) {
      throw Failure{kUsage, "not a letter: '" + item + "'"};
    }
  }
  NormalForm nf;
  try {
    nf = normal_form(datum, word);
  } catch (std::invalid_argument const& e) {
    throw Failure{kUsage, e.what()};
  }
  std::cout << join(nf.a_word) << " | " << join(nf.b_word) << '\n';
  return kOk;
}

int cmd_matrices(std::string const& file, bool pairs) {
  auto const tm = build_transition_matrices(load_valid(file));
  std::cout << "# tiles\n";
  for (std::size_t i = 0; i < tm.size(); ++i) {
    std::cout << i << ' ' << tm.alphabet[i].to_string() << '\n';
  }
  std::cout << "# M1\n" << (pairs ? tm.M1.to_pairs_text() : tm.M1.to_dense_text());
  std::cout << "# M2\n" << (pairs ? tm.M2.to_pairs_text() : tm.M2.to_dense_text());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BM groups: VH-data, shift groups, K-theory, enumeration"};
  app.require_subcommand(1);

  std::string file;
  std::string word;
  bool json = false;
  int h3_bound = 3;
  int m = 4;
  int n = 4;
  std::string mode = "with-swap";
  std::string out;
  bool table = false;
  long long p = 0;
  long long l = 0;
  bool run_analysis = false;
  bool pairs = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a datum file");
  validate_cmd->add_option("FILE", file)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis of a datum file");
  analyze_cmd->add_option("FILE", file)->required();
  analyze_cmd->add_flag("--json", json, "JSON output");
  analyze_cmd->add_option("--h3-bound", h3_bound, "period bound for H3")
      ->check(CLI::NonNegativeNumber);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "all relation sets for degrees m, n");
  enumerate_cmd->add_option("-m", m)->required();
  enumerate_cmd->add_option("-n", n)->required();
  enumerate_cmd->add_option("--mode", mode)->check(CLI::IsMember({"side-preserving", "with-swap"}));
  enumerate_cmd->add_option("--out", out, "directory for class files and tables");
  enumerate_cmd->add_flag("--table", table);

  auto* mozes_cmd = app.add_subcommand("mozes", "quaternion lattice datum");
  mozes_cmd->add_option("-p", p)->required();
  mozes_cmd->add_option("-l", l)->required();
  mozes_cmd->add_option("--out", out, "datum file");
  mozes_cmd->add_flag("--analyze", run_analysis);

  auto* nf_cmd = app.add_subcommand("nf", "normal form of a word");
  nf_cmd->add_option("FILE", file)->required();
  nf_cmd->add_option("WORD", word, "comma-separated letters")->required()->allow_extra_args(false);

  auto* matrices_cmd = app.add_subcommand("matrices", "print the transition matrices");
  matrices_cmd->add_option("FILE", file)->required();
  matrices_cmd->add_flag("--pairs", pairs, "list nonzero entries instead of dense rows");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*analyze_cmd) return cmd_analyze(file, json, h3_bound);
    if (*enumerate_cmd) return cmd_enumerate(m, n, mode, out, table);
    if (*mozes_cmd) return cmd_mozes(p, l, out, run_analysis);
    if (*nf_cmd) return cmd_nf(file, word);
    if (*matrices_cmd) return cmd_matrices(file, pairs);
  } catch (Failure const& f) {
    std::cerr << f.message << '\n';
    return f.code;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
