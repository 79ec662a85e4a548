#include "rpluq_cli/cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "rpluq/errors.hpp"
#include "rpluq/io.hpp"
#include "rpluq/matgen.hpp"
#include "rpluq/oracle.hpp"
#include "rpluq/pluq.hpp"
#include "rpluq/rank_profile.hpp"

namespace rpluq::cli {

namespace {

using json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path);
  return is;
}

DenseMatrix load_matrix(const std::string& path) {
  auto is = open_in(path);
  return read_matrix(is);
}

PluqFactors load_factors(const std::string& path) {
  auto is = open_in(path);
  return read_factors(is);
}

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path + " for writing");
  write(os);
  os.flush();
  if (!os) throw IoError("write to " + path + " failed");
}

enum class Algo { kRecursive, kIterative, kPle };

const std::map<std::string, Algo> kDecomposeAlgos{{"recursive", Algo::kRecursive},
                                                  {"iterative", Algo::kIterative}};
const std::map<std::string, Algo> kBenchAlgos{
    {"recursive", Algo::kRecursive}, {"iterative", Algo::kIterative}, {"ple", Algo::kPle}};

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::kRecursive:
      return "recursive";
    case Algo::kIterative:
      return "iterative";
    case Algo::kPle:
      return "ple";
  }
  return "?";
}

PluqFactors factorize(DenseMatrix a, Algo algo, std::size_t threshold, OpCounts& counts) {
  switch (algo) {
    case Algo::kIterative:
      return pluq_base_case(std::move(a), counts);
    case Algo::kPle:
      return oracle::ple_row_major(std::move(a), counts);
    case Algo::kRecursive:
      break;
  }
  return pluq(std::move(a), threshold, counts);
}

json counts_json(const OpCounts& c) {
  return {{"field_mul", c.field_mul},
          {"field_add", c.field_add},
          {"field_inv", c.field_inv},
          {"modular_reductions", c.modular_reductions}};
}

json profile_json(const ProfilePair& pp) {
  return {{"rows", pp.rows.indices()}, {"cols", pp.cols.indices()}};
}

void print_list(std::ostream& out, const char* label, const RankProfile& rp) {
  out << label << ":";
  for (std::size_t i : rp.indices()) out << ' ' << i;
  out << '\n';
}

struct DecomposeArgs {
  std::string in, out;
  Algo algo = Algo::kRecursive;
  std::size_t threshold = 30;
};

int do_decompose(const DecomposeArgs& a, std::ostream& out) {
  OpCounts counts;
  const PluqFactors f = factorize(load_matrix(a.in), a.algo, a.threshold, counts);
  emit(a.out, out, [&](std::ostream& os) { write_factors(os, f); });
  return kOk;
}

struct VerifyArgs {
  std::string matrix, factors;
};

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const DenseMatrix m = load_matrix(a.matrix);
  const PluqFactors f = load_factors(a.factors);
  if (m.rows() != f.rows() || m.cols() != f.cols() || m.modulus() != f.modulus()) {
    err << "error: matrix is " << m.rows() << "x" << m.cols() << " over F_" << m.modulus()
        << " but factors are " << f.rows() << "x" << f.cols() << " over F_" << f.modulus()
        << '\n';
    return kUsage;
  }
  const VerifyReport rep = verify_factors(m, f);
  if (!rep.ok) {
    out << "FAIL: " << rep.failure << '\n';
    return kFailure;
  }
  out << "OK\n";
  return kOk;
}

struct ProfileArgs {
  std::string matrix;
  std::vector<std::size_t> leading;
  bool all_leading = false;
  bool as_json = false;
  bool check_oracle = false;
  Algo algo = Algo::kRecursive;
  std::size_t threshold = 30;
};

int do_rank_profile(const ProfileArgs& a, std::ostream& out, std::ostream& err) {
  DenseMatrix m = load_matrix(a.matrix);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t k = rows, t = cols;
  if (!a.leading.empty()) {
    k = a.leading[0];
    t = a.leading[1];
    if (k > rows || t > cols) {
      err << "error: --leading " << k << ' ' << t << " outside a " << rows << "x" << cols
          << " matrix\n";
      return kUsage;
    }
  }
  std::optional<oracle::LeadingProfileTable> table;
  if (a.check_oracle) table = oracle::all_leading_rank_profiles_naive(m);

  OpCounts counts;
  const PluqFactors f = factorize(std::move(m), a.algo, a.threshold, counts);
  const PivotSupport support(f);
  bool match = true;

  if (a.all_leading) {
    json cells = json::array();
    for (std::size_t i = 0; i <= rows; ++i) {
      for (std::size_t j = 0; j <= cols; ++j) {
        const ProfilePair pp = support.leading(i, j);
        if (table && table->at(i, j) != pp) match = false;
        json cell = {{"k", i}, {"t", j}};
        cell.update(profile_json(pp));
        cells.push_back(std::move(cell));
      }
    }
    json doc = {{"m", rows}, {"n", cols}, {"rank", f.rank}, {"leading", std::move(cells)}};
    if (table) doc["oracle_match"] = match;
    if (a.as_json) {
      out << doc.dump() << '\n';
    } else {
      for (const auto& cell : doc["leading"]) {
        out << "(" << cell["k"] << "," << cell["t"] << ") rows=" << cell["rows"].dump()
            << " cols=" << cell["cols"].dump() << '\n';
      }
    }
  } else {
    const ProfilePair pp = support.leading(k, t);
    if (table && table->at(k, t) != pp) match = false;
    if (a.as_json) {
      json doc = profile_json(pp);
      if (table) doc["oracle_match"] = match;
      out << doc.dump() << '\n';
    } else {
      print_list(out, "rows", pp.rows);
      print_list(out, "cols", pp.cols);
    }
  }
  if (!a.as_json && table) out << "oracle: " << (match ? "match" : "MISMATCH") << '\n';
  if (!match) err << "error: rank profiles disagree with the brute-force oracle\n";
  return match ? kOk : kFailure;
}

struct CountArgs {
  std::string algo = "pluq";
  std::size_t m = 64, n = 0;
  std::uint32_t p = 1009;
  std::uint64_t seed = 1;
  std::string profile = "generic";
  std::optional<std::size_t> rank;
  std::size_t threshold = 1;
};

int do_count(CountArgs a, std::ostream& out, std::ostream& err) {
  if (a.n == 0) a.n = a.m;
  const bool generic = a.profile == "generic";
  std::optional<std::uint64_t> prediction;
  if (generic) {
    if (a.algo == "pluq") {
      if (a.m != a.n || !std::has_single_bit(a.m)) {
        err << "error: the pluq closed form needs m = n and m a power of two\n";
        return kUsage;
      }
      prediction = oracle::r_pluq_closed_form(a.m);
    } else {
      if (a.m > a.n) {
        err << "error: the ple recurrence needs m <= n\n";
        return kUsage;
      }
      prediction = oracle::r_ple_recurrence(a.m, a.n);
    }
  }
  DenseMatrix mat = [&] {
    if (generic) return matgen::gen_generic(a.m, a.n, a.p, a.seed);
    const std::size_t r = a.rank.value_or(std::min(a.m, a.n) / 2);
    return matgen::gen_rank_deficient_leu(a.m, a.n, r, a.p, a.seed);
  }();

  OpCounts counts;
  const PluqFactors f = a.algo == "pluq" ? pluq(std::move(mat), a.threshold, counts)
                                         : oracle::ple_row_major(std::move(mat), counts);
  json doc = {{"algo", a.algo},   {"m", a.m},         {"n", a.n},
              {"p", a.p},         {"seed", a.seed},   {"profile", a.profile},
              {"rank", f.rank},   {"threshold", a.threshold}};
  if (a.algo != "pluq") doc.erase("threshold");
  doc["counts"] = counts_json(counts);
  if (prediction) {
    doc["prediction"] = *prediction;
    doc["delta"] = static_cast<std::int64_t>(counts.modular_reductions) -
                   static_cast<std::int64_t>(*prediction);
  } else {
    doc["prediction"] = nullptr;
    doc["delta"] = nullptr;
  }
  out << doc.dump() << '\n';
  return kOk;
}

struct BenchArgs {
  std::size_t m = 256, n = 0;
  std::optional<std::size_t> rank;
  std::uint32_t p = 1009;
  std::uint64_t seed = 1;
  std::size_t reps = 3;
  std::size_t threshold = 30;
  Algo algo = Algo::kRecursive;
  std::string csv;
};

int do_bench(BenchArgs a, std::ostream& out) {
  if (a.n == 0) a.n = a.m;
  const std::size_t r = a.rank.value_or(std::min(a.m, a.n) / 2);
  if (r > std::min(a.m, a.n)) throw UsageError("--rank exceeds min(m, n)");
  emit(a.csv, out, [&](std::ostream& os) {
    os << "algo,m,n,rank,threshold,rep,seconds,field_mul,reductions\n";
    if (a.reps == 0) return;
    const DenseMatrix input = matgen::gen_rank_deficient_leu(a.m, a.n, r, a.p, a.seed);
    for (std::size_t rep = 0; rep < a.reps; ++rep) {
      DenseMatrix work = input;
      OpCounts counts;
      const auto start = std::chrono::steady_clock::now();
      const PluqFactors f = factorize(std::move(work), a.algo, a.threshold, counts);
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.6f", dt.count());
      os << algo_name(a.algo) << ',' << a.m << ',' << a.n << ',' << f.rank << ','
         << a.threshold << ',' << rep << ',' << secs << ',' << counts.field_mul << ','
         << counts.modular_reductions << '\n';
    }
  });
  return kOk;
}

struct GenerateArgs {
  std::size_t m = 8, n = 0;
  std::optional<std::size_t> rank;
  std::uint32_t p = 1009;
  std::uint64_t seed = 1;
  std::string kind = "uniform";
  std::string out;
};

int do_generate(GenerateArgs a, std::ostream& out) {
  if (a.n == 0) a.n = a.m;
  DenseMatrix mat = [&] {
    if (a.kind == "generic") return matgen::gen_generic(a.m, a.n, a.p, a.seed);
    if (a.kind == "deficient") {
      return matgen::gen_rank_deficient_leu(a.m, a.n, a.rank.value_or(std::min(a.m, a.n) / 2),
                                            a.p, a.seed);
    }
    return matgen::gen_uniform(a.m, a.n, a.p, a.seed);
  }();
  emit(a.out, out, [&](std::ostream& os) { write_matrix(os, mat); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"PLUQ decomposition and rank profiles over prime fields", "rpluq"};
  app.require_subcommand(1);
  std::function<int()> action;

  DecomposeArgs dec;
  auto* c_dec = app.add_subcommand("decompose", "Write the PLUQ factor file of a matrix");
  c_dec->add_option("matrix", dec.in, "Input matrix file")->required();
  c_dec->add_option("-o,--output", dec.out, "Factor file (default: stdout)");
  c_dec->add_option("--algo", dec.algo, "recursive | iterative")
      ->transform(CLI::CheckedTransformer(kDecomposeAlgos));
  c_dec->add_option("--threshold", dec.threshold, "Base-case threshold")->capture_default_str();
  c_dec->callback([&] { action = [&] { return do_decompose(dec, out); }; });

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Check a factor file against its matrix");
  c_ver->add_option("matrix", ver.matrix, "Matrix file")->required();
  c_ver->add_option("factors", ver.factors, "Factor file")->required();
  c_ver->callback([&] { action = [&] { return do_verify(ver, out, err); }; });

  ProfileArgs prof;
  auto* c_prof = app.add_subcommand("rank-profile", "Row and column rank profiles");
  c_prof->add_option("matrix", prof.matrix, "Matrix file")->required();
  auto* lead = c_prof->add_option("--leading", prof.leading, "Leading k x t submatrix")
                   ->expected(2)
                   ->type_name("K T");
  c_prof->add_flag("--all-leading", prof.all_leading, "Every leading submatrix")->excludes(lead);
  c_prof->add_flag("--json", prof.as_json, "JSON output");
  c_prof->add_flag("--oracle", prof.check_oracle, "Cross-check against brute force");
  c_prof->add_option("--algo", prof.algo, "recursive | iterative")
      ->transform(CLI::CheckedTransformer(kDecomposeAlgos));
  c_prof->add_option("--threshold", prof.threshold, "Base-case threshold")
      ->capture_default_str();
  c_prof->callback([&] { action = [&] { return do_rank_profile(prof, out, err); }; });

  CountArgs cnt;
  auto* c_cnt = app.add_subcommand("count", "Operation counts against the cost model");
  c_cnt->add_option("--algo", cnt.algo, "pluq | ple")
      ->check(CLI::IsMember({"pluq", "ple"}))
      ->capture_default_str();
  c_cnt->add_option("--m", cnt.m, "Rows")->check(CLI::PositiveNumber)->capture_default_str();
  c_cnt->add_option("--n", cnt.n, "Columns (default: m)")->check(CLI::PositiveNumber);
  c_cnt->add_option("--p", cnt.p, "Prime modulus")->capture_default_str();
  c_cnt->add_option("--seed", cnt.seed, "Generator seed")->capture_default_str();
  c_cnt->add_option("--profile", cnt.profile, "generic | deficient")
      ->check(CLI::IsMember({"generic", "deficient"}))
      ->capture_default_str();
  c_cnt->add_option("--rank", cnt.rank, "Rank for deficient inputs (default: min(m,n)/2)");
  c_cnt->add_option("--threshold", cnt.threshold, "Base-case threshold for pluq")
      ->capture_default_str();
  c_cnt->callback([&] { action = [&] { return do_count(cnt, out, err); }; });

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Timed runs as CSV");
  c_bench->add_option("--m", bench.m, "Rows")->check(CLI::PositiveNumber)->capture_default_str();
  c_bench->add_option("--n", bench.n, "Columns (default: m)")->check(CLI::PositiveNumber);
  c_bench->add_option("--rank", bench.rank, "Rank (default: min(m,n)/2)");
  c_bench->add_option("--p", bench.p, "Prime modulus")->capture_default_str();
  c_bench->add_option("--seed", bench.seed, "Generator seed")->capture_default_str();
  c_bench->add_option("--reps", bench.reps, "Repetitions")->capture_default_str();
  c_bench->add_option("--threshold", bench.threshold, "Base-case threshold")
      ->capture_default_str();
  c_bench->add_option("--algo", bench.algo, "recursive | iterative | ple")
      ->transform(CLI::CheckedTransformer(kBenchAlgos));
  c_bench->add_option("--csv", bench.csv, "Output file (default: stdout)");
  c_bench->callback([&] { action = [&] { return do_bench(bench, out); }; });

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "Write a seeded random matrix");
  c_gen->add_option("--m", gen.m, "Rows")->capture_default_str();
  c_gen->add_option("--n", gen.n, "Columns (default: m)");
  c_gen->add_option("--rank", gen.rank, "Rank for deficient (default: min(m,n)/2)");
  c_gen->add_option("--p", gen.p, "Prime modulus")->capture_default_str();
  c_gen->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  c_gen->add_option("--kind", gen.kind, "uniform | generic | deficient")
      ->check(CLI::IsMember({"uniform", "generic", "deficient"}))
      ->capture_default_str();
  c_gen->add_option("-o,--output", gen.out, "Output file (default: stdout)");
  c_gen->callback([&] { action = [&] { return do_generate(gen, out); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace rpluq::cli
