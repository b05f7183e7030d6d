#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kfg/classifier.hpp"
#include "kfg/enumerate.hpp"
#include "kfg/monoid.hpp"
#include "kfg/reference.hpp"
#include "kfg/sums.hpp"
#include "kfg/verify.hpp"

namespace {

kfg::Topology load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return kfg::topology_from_json(text);
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("KFG_CACHE_DIR")) return env;
  return "";
}

int cmd_enumerate(int n, const std::string& cache) {
  std::vector<kfg::Topology> classes;
  if (!cache.empty() && kfg::cache_has(cache, n)) {
    classes = kfg::cache_load(cache, n);
  } else {
    classes = kfg::enumerate_classes(n);
    if (!cache.empty()) kfg::cache_store(cache, n);
  }
  for (const auto& t : classes) std::cout << kfg::topology_to_json(t) << "\n";
  std::cerr << classes.size() << " classes on " << n << " points\n";
  return 0;
}

int cmd_classify(const std::string& space_file, int subset) {
  kfg::Topology t = load_space(space_file);
  if (subset < 0) {
    std::cout << "space,subset,phi,psi,k,kf\n";
    for (kfg::Code a = 0; a < t.subset_count(); ++a) {
      kfg::PsiProfile p = kfg::classify_profile(t, a);
      std::cout << space_file << "," << a << "," << p.phi << "," << p.psi
                << "," << p.k << "," << p.kf << "\n";
    }
    return 0;
  }
  kfg::PsiProfile p = kfg::classify_profile(t, kfg::Code(subset));
  std::cout << "space,subset,phi,psi,k,kf\n";
  std::cout << space_file << "," << subset << "," << p.phi << "," << p.psi
            << "," << p.k << "," << p.kf << "\n";
  return 0;
}

int cmd_monoid(const std::string& space_file, const std::string& generators) {
  kfg::Topology t = load_space(space_file);
  std::vector<std::string> gens;
  if (generators == "ab") gens = {"a", "b"};
  else if (generators == "abf") gens = {"a", "b", "f"};
  else if (generators == "abfg") gens = {"a", "b", "f", "g"};
  else {
    std::cerr << "generators must be ab, abf or abfg\n";
    return 2;
  }
  auto monoid = kfg::generate_monoid(t, gens);
  std::cout << "size," << monoid.size() << "\n";
  std::cout << "type," << kfg::to_string(kfg::classify_space(t)) << "\n";
  std::cout << "bordered-type," << kfg::to_string(kfg::classify_space_g(t))
            << "\n";
  return 0;
}

int cmd_sum(const std::vector<std::string>& files) {
  std::vector<kfg::Topology> parts;
  for (const auto& f : files) parts.push_back(load_space(f));
  kfg::Topology sum = kfg::sum_space(parts);
  std::cout << kfg::topology_to_json(sum) << "\n";
  return 0;
}

int cmd_tables(const std::string& name, int jobs) {
  if (name == "table5") {
    std::cout << "n,GE,KD,ED,OU,EO,P,D,total\n";
    for (int n = 1; n <= 7; ++n) {
      kfg::FrequencyRecord rec = kfg::monoid_frequencies(n);
      std::cout << n;
      for (auto type :
           {kfg::SpaceType::GE, kfg::SpaceType::KD, kfg::SpaceType::ED,
            kfg::SpaceType::OU, kfg::SpaceType::EO, kfg::SpaceType::P,
            kfg::SpaceType::D})
        std::cout << "," << rec.counts[type];
      std::cout << "," << rec.total() << "\n";
    }
    return 0;
  }
  if (name == "table8") {
    std::cout << "psi,min_points\n";
    for (const auto& row : kfg::ref::minimal_psi_rows())
      for (int v : row.psi) {
        std::cout << v << "," << row.n << "\n";
        if (kfg::psi_dual(v) != v)
          std::cout << kfg::psi_dual(v) << "," << row.n << "\n";
      }
    return 0;
  }
  if (name == "table12") {
    std::cout << "column,copies,new_psi,k,kf\n";
    for (const auto& row : kfg::ref::topsum_table()) {
      kfg::TopsumReport rep =
          kfg::topsum_report(std::string(row.column), row.copies);
      std::cout << rep.column << "," << rep.copies << ",\"";
      bool first = true;
      for (int v : rep.new_psi) {
        if (!first) std::cout << " ";
        std::cout << v;
        first = false;
      }
      std::cout << "\"," << rep.k << "," << rep.kf << "\n";
    }
    return 0;
  }
  if (name == "meet") {
    (void)jobs;
    kfg::WitnessLibrary lib(8);
    kfg::MeetTable table = kfg::meet_table(lib);
    std::cout << "block,m,n,meet\n";
    for (int m = 1; m <= 30; ++m)
      for (int n = m; n <= 30; ++n)
        std::cout << "phi," << m << "," << n << "," << int(table.phi[m][n])
                  << "\n";
    for (int m = 1; m <= 70; ++m)
      for (int n = m; n <= 70; ++n)
        std::cout << "psi," << m << "," << n << "," << int(table.psi[m][n])
                  << "\n";
    return 0;
  }
  std::cerr << "unknown table: " << name << "\n";
  return 2;
}

int cmd_verify(const std::string& suite, int max_n, int jobs,
               const std::string& format, bool extended) {
  std::vector<std::string> names;
  if (!suite.empty()) {
    names = {suite};
  } else {
    names = kfg::gating_suites();
    if (extended)
      for (const auto& s : kfg::extended_suites()) names.push_back(s);
  }
  kfg::VerifyOptions options;
  options.max_n = max_n;
  options.jobs = jobs;
  std::vector<kfg::SuiteReport> reports;
  bool all_pass = true;
  for (const auto& name : names) {
    reports.push_back(kfg::run_suite(name, options));
    all_pass &= reports.back().pass();
  }
  std::cout << kfg::render_reports(reports, format);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator calculus on finite topological spaces"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "classes up to homeomorphism");
  int n = 5;
  std::string cache = default_cache_dir();
  enumerate->add_option("--n", n, "number of points")->required();
  enumerate->add_option("--cache", cache, "cache directory");

  auto* classify = app.add_subcommand("classify", "per-subset classification");
  std::string space_file;
  int subset = -1;
  classify->add_option("--space", space_file, "space JSON file")->required();
  classify->add_option("--subset", subset, "subset code (default: all)");

  auto* monoid = app.add_subcommand("monoid", "generated operator monoid");
  std::string generators = "abf";
  std::string monoid_space;
  monoid->add_option("--space", monoid_space, "space JSON file")->required();
  monoid->add_option("--generators", generators, "ab | abf | abfg");

  auto* sum = app.add_subcommand("sum", "disjoint union of spaces");
  std::vector<std::string> sum_files;
  sum->add_option("--spaces", sum_files, "space JSON files")->required();

  auto* tables = app.add_subcommand("tables", "reference tables");
  std::string table_name;
  tables->add_option("--name", table_name, "table5 | table8 | table12 | meet")
      ->required();

  auto* verify = app.add_subcommand("verify-paper", "run verification suites");
  std::string suite, format = "text";
  int max_n = 0, jobs = 1;
  bool extended = false;
  verify->add_option("--suite", suite, "single suite name");
  verify->add_option("--max-n", max_n, "override size bound");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--format", format, "text | json | csv");
  verify->add_flag("--extended", extended, "include long-running suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(n, cache);
    if (classify->parsed()) return cmd_classify(space_file, subset);
    if (monoid->parsed()) return cmd_monoid(monoid_space, generators);
    if (sum->parsed()) return cmd_sum(sum_files);
    if (tables->parsed()) return cmd_tables(table_name, jobs);
    if (verify->parsed())
      return cmd_verify(suite, max_n, jobs, format, extended);
  } catch (const kfg::UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
