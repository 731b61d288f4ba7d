// colcrush: generate, encode, decode, query, advise and benchmark columns.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "colcrush/advisor.hpp"
#include "colcrush/error.hpp"
#include "colcrush/kernels.hpp"
#include "colcrush/query.hpp"

using namespace colcrush;
using json = nlohmann::json;

namespace {

enum ExitCode {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kFormat = 3,
  kUnknownCodec = 4,
  kTypeMismatch = 5,
  kOracleMismatch = 6,
  kUnsorted = 7,
  kCorruptStream = 8,
};

class OracleMismatch : public Error {
 public:
  using Error::Error;
};

struct GenFlags {
  std::uint64_t rows = 1'000'000;
  std::uint64_t distinct = 1000;
  std::string dist = "uniform";
  double zipf_s = 1.0;
  bool sorted = false;
  std::optional<std::uint64_t> seed;
  std::string kind = "int32";
  std::string name = "A";
};

void add_gen_flags(CLI::App* cmd, GenFlags& g) {
  cmd->add_option("--rows", g.rows, "Row count")->capture_default_str();
  cmd->add_option("--distinct", g.distinct, "Distinct values drawn from")->capture_default_str();
  cmd->add_option("--dist", g.dist, "Value distribution")
      ->check(CLI::IsMember({"uniform", "zipf"}))
      ->capture_default_str();
  cmd->add_option("--zipf-s", g.zipf_s, "Zipf exponent")->capture_default_str();
  cmd->add_flag("--sorted", g.sorted, "Sort the column");
  cmd->add_option("--seed", g.seed, "RNG seed (falls back to COLCRUSH_SEED, then 42)");
  cmd->add_option("--kind", g.kind, "Value type")
      ->check(CLI::IsMember({"int32", "string"}))
      ->capture_default_str();
  cmd->add_option("--name", g.name, "Column name")->capture_default_str();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("COLCRUSH_SEED")) return std::stoull(env);
  return 42;
}

GenerateOptions to_options(const GenFlags& g) {
  GenerateOptions opt;
  opt.kind = g.kind == "string" ? ValueKind::kString : ValueKind::kInt32;
  opt.row_count = g.rows;
  opt.domain_size = g.distinct;
  opt.distribution = g.dist == "zipf" ? Distribution::zipf(g.zipf_s) : Distribution::uniform();
  opt.sorted = g.sorted;
  opt.seed = resolve_seed(g.seed);
  opt.name = g.name;
  return opt;
}

std::string file_magic(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  char buf[4] = {};
  in.read(buf, 4);
  return std::string(buf, static_cast<std::size_t>(in.gcount()));
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// A "COLC" file, or a one-column CSV when the path ends in .csv.
Column load_column(const std::string& path) {
  if (ends_with(path, ".csv")) return read_csv_column_file(path);
  return read_column_file(path);
}

Scheme scheme_from_name(const std::string& name) {
  auto s = parse_scheme(name);
  if (!s) throw UnknownCodecError("unknown scheme '" + name + "'");
  return *s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median_seconds(const std::function<void()>& fn, int runs) {
  fn();  // warm-up
  std::vector<double> t;
  for (int i = 0; i < runs; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    t.push_back(seconds_since(t0));
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

json space_json(const SpaceEstimate& s) {
  return {{"payload", s.payload}, {"dictionary", s.dictionary}, {"total", s.total()}};
}

void print_result(const QueryResult& r, QueryOutput output) {
  std::cout << "count " << r.count << "\n";
  if (output == QueryOutput::kRows) {
    for (auto row : *r.rows) std::cout << row << "\n";
  } else if (output == QueryOutput::kProject) {
    std::visit(
        [](const auto& vals) {
          for (const auto& v : vals) std::cout << v << "\n";
        },
        *r.projected);
  }
}

int run_gen(const GenFlags& g, const std::string& out) {
  auto col = generate(to_options(g));
  write_column_file(out, col);
  auto s = stats(col);
  std::cout << "wrote " << out << ": " << s.row_count << " rows, " << s.domain_size
            << " distinct, " << (s.is_sorted ? "sorted" : "unsorted") << "\n";
  return kOk;
}

int run_encode(const std::string& in, const std::string& scheme_name, const std::string& out) {
  auto scheme = scheme_from_name(scheme_name);
  auto col = load_column(in);
  if (auto why = inadmissible_reason(stats(col), scheme)) {
    if (is_rle(scheme) && stats(col).kind == ValueKind::kInt32) throw UnsortedColumnError();
    throw TypeMismatchError(*why);
  }
  auto enc = encode(col, scheme);
  write_encoded_file(out, enc);
  auto space = measured_space(enc);
  std::cout << "wrote " << out << ": " << to_string(scheme) << ", payload " << space.payload
            << " B, dictionary " << space.dictionary << " B (raw " << 4 * col.row_count()
            << " B)\n";
  return kOk;
}

int run_decode(const std::string& in, const std::string& out) {
  auto enc = read_encoded_file(in);
  auto col = decode(enc, "A");
  write_column_file(out, col);
  std::cout << "wrote " << out << ": " << col.row_count() << " rows\n";
  return kOk;
}

int run_query(const std::string& in, const std::string& pred_text, const std::string& output_name,
              const std::string& project_path) {
  QueryOutput output = output_name == "rows"      ? QueryOutput::kRows
                       : output_name == "project" ? QueryOutput::kProject
                                                  : QueryOutput::kCount;
  std::optional<Column> projection;
  if (output == QueryOutput::kProject) {
    if (project_path.empty()) throw std::invalid_argument("--output project needs --project");
    projection = load_column(project_path);
  }
  const Column* proj = projection ? &*projection : nullptr;

  if (!ends_with(in, ".csv") && file_magic(in) == "COLD") {
    auto enc = read_encoded_file(in);
    auto pred = parse_predicate(pred_text, enc.value_kind());
    print_result(execute(enc, {pred, output, proj}), output);
  } else {
    auto col = load_column(in);
    auto pred = parse_predicate(pred_text, col.kind());
    auto r = brute_force_query(col, pred, proj);
    if (output != QueryOutput::kRows) r.rows.reset();
    print_result(r, output);
  }
  return kOk;
}

void print_recommendation(const ColumnStats& s, const Recommendation& rec) {
  std::cout << "stats: " << (s.kind == ValueKind::kString ? "string" : "int32") << ", "
            << s.row_count << " rows, " << s.domain_size << " distinct, "
            << (s.is_sorted ? "sorted" : "unsorted") << "\n";
  std::cout << "branch: " << to_string(rec.branch) << "\n";
  if (rec.preprocessing) std::cout << "preprocess: " << to_string(*rec.preprocessing) << "\n";
  std::cout << "recommend: " << to_string(rec.primary) << "\n";
  std::cout << "rationale: " << rec.rationale << "\n";
  std::cout << "predicted bytes (raw " << rec.predicted.raw << "):\n";
  for (const auto& [scheme, est] : rec.predicted.schemes) {
    std::cout << "  " << to_string(scheme) << ": payload " << est.payload << ", dictionary "
              << est.dictionary << "\n";
  }
}

int run_advise(const std::string& in, const GenFlags& g, std::optional<std::uint64_t> runs) {
  ColumnStats s;
  if (!in.empty()) {
    auto col = load_column(in);
    s = stats(col);
    if (s.is_sorted && s.kind == ValueKind::kInt32 && !runs) {
      runs = run_count(rle_encode(col, RleVariant::kVl));
    }
  } else {
    s = {g.kind == "string" ? ValueKind::kString : ValueKind::kInt32, g.rows, g.distinct, g.sorted};
  }
  print_recommendation(s, advise(s, runs));
  return kOk;
}

// Billion-row RLE space line from the model, then the codec timing
// matrix on a generated column. Every timed answer is checked against the
// brute-force scan first.
int run_bench(const GenFlags& g, int runs, const std::string& out) {
  if (runs < 1) throw std::invalid_argument("--runs must be at least 1");
  json report;
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  report["machine"] = {{"hardware_threads", std::thread::hardware_concurrency()},
                       {"omp_max_threads", kernels::max_threads()},
                       {"clock", "steady_clock"},
                       {"timestamp", stamp}};

  ColumnStats billion{ValueKind::kInt32, 1'000'000'000, 1'000'000, true};
  auto t1 = predict_space(billion, 1'000'000);
  std::cout << "RLE space model (10^9 rows, 10^6 runs, D = 10^6)\n";
  std::cout << "  raw " << t1.raw << " B\n";
  json t1j = {{"raw", t1.raw}};
  for (auto s : {Scheme::kVlRle, Scheme::kVslRle, Scheme::kVsRle, Scheme::kVsbRle}) {
    std::cout << "  " << to_string(s) << " " << t1.schemes.at(s).payload << " B\n";
    t1j[std::string(to_string(s))] = t1.schemes.at(s).payload;
  }
  report["rle_space_model"] = t1j;

  auto opt = to_options(g);
  auto col = generate(opt);
  auto st = stats(col);
  std::optional<std::uint64_t> runs_measured;
  if (st.is_sorted && st.kind == ValueKind::kInt32) {
    runs_measured = run_count(rle_encode(col, RleVariant::kVl));
  }
  auto predicted = predict_space(st, runs_measured);
  report["column"] = {{"kind", g.kind},          {"rows", st.row_count},
                      {"distinct", st.domain_size}, {"sorted", st.is_sorted},
                      {"distribution", g.dist},  {"zipf_s", g.zipf_s},
                      {"seed", opt.seed},        {"runs", runs_measured ? json(*runs_measured) : json()}};
  report["timing_runs"] = runs;

  // Probe values: the middle row's value and one that is absent.
  std::vector<Value> probes;
  if (st.row_count > 0) probes.push_back(col.at(st.row_count / 2));
  if (st.kind == ValueKind::kInt32) {
    probes.push_back(std::int32_t(-1));
  } else {
    probes.push_back(std::string("~absent"));
  }

  std::cout << "\nColumn: " << st.row_count << " rows, " << st.domain_size << " distinct, "
            << (st.is_sorted ? "sorted" : "unsorted") << ", " << g.dist << ", seed " << opt.seed
            << "\n";
  std::cout << "scheme      measured B  predicted B  encode s    query                     median s    answer  oracle\n";

  json rows = json::array();
  {
    // Uncompressed scan baseline.
    json queries = json::array();
    for (const auto& t : probes) {
      for (auto pred : {Predicate::eq(col.name(), t), Predicate::leq(col.name(), t)}) {
        const bool eq = pred.op == CompareOp::kEq;
        auto scan = [&]() -> std::uint64_t {
          if (st.kind == ValueKind::kInt32) {
            auto k = std::get<std::int32_t>(pred.operand);
            return eq ? kernels::count_eq_parallel(col.ints(), k)
                      : kernels::count_leq_parallel(col.ints(), k);
          }
          const auto& k = std::get<std::string>(pred.operand);
          if (eq) return kernels::count_eq_parallel(col.strings(), k);
          const auto& v = col.strings();
          return kernels::count_if_parallel(v.size(), [&](std::uint64_t i) { return v[i] <= k; });
        };
        auto truth = brute_force_query(col, pred).count;
        auto got = scan();
        if (got != truth) throw OracleMismatch("raw scan disagrees with the oracle");
        double secs = median_seconds([&] { scan(); }, runs);
        char line[256];
        std::snprintf(line, sizeof line, "%-10s  %10llu  %11llu  %9s  %-24s  %9.3e  %7llu  ok\n",
                      "raw", static_cast<unsigned long long>(predicted.raw),
                      static_cast<unsigned long long>(predicted.raw), "-", to_string(pred).c_str(),
                      secs, static_cast<unsigned long long>(got));
        std::cout << line;
        queries.push_back({{"predicate", to_string(pred)},
                           {"median_seconds", secs},
                           {"count", got},
                           {"oracle_match", true}});
      }
    }
    rows.push_back({{"scheme", "raw"}, {"queries", queries}});
  }
  for (auto scheme : kAllSchemes) {
    if (inadmissible_reason(st, scheme)) continue;
    auto t0 = std::chrono::steady_clock::now();
    auto enc = encode(col, scheme, [](const std::string&) {});
    double encode_s = seconds_since(t0);
    auto measured = measured_space(enc);
    auto pit = predicted.schemes.find(scheme);
    json entry = {{"scheme", to_string(scheme)},
                  {"measured", space_json(measured)},
                  {"predicted", pit == predicted.schemes.end() ? json() : space_json(pit->second)},
                  {"encode_seconds", encode_s}};
    json queries = json::array();
    for (const auto& t : probes) {
      for (auto pred : {Predicate::eq(col.name(), t), Predicate::leq(col.name(), t)}) {
        auto truth = brute_force_query(col, pred).count;
        std::uint64_t got = execute(enc, {pred, QueryOutput::kCount}).count;
        bool match = got == truth;
        if (!match) {
          throw OracleMismatch(std::string(to_string(scheme)) + " answered " + std::to_string(got) +
                               " for " + to_string(pred) + ", oracle says " + std::to_string(truth));
        }
        double secs = median_seconds([&] { execute(enc, {pred, QueryOutput::kCount}); }, runs);
        char line[256];
        std::snprintf(line, sizeof line, "%-10s  %10llu  %11s  %9.4f  %-24s  %9.3e  %7llu  %s\n",
                      std::string(to_string(scheme)).c_str(),
                      static_cast<unsigned long long>(measured.total()),
                      pit == predicted.schemes.end() ? "-"
                                                     : std::to_string(pit->second.total()).c_str(),
                      encode_s, to_string(pred).c_str(), secs,
                      static_cast<unsigned long long>(got), match ? "ok" : "MISMATCH");
        std::cout << line;
        queries.push_back({{"predicate", to_string(pred)},
                           {"median_seconds", secs},
                           {"count", got},
                           {"oracle_match", match}});
      }
    }
    entry["queries"] = queries;
    rows.push_back(entry);
  }
  report["schemes"] = rows;

  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error("cannot open '" + out + "' for writing");
    f << report.dump(2) << "\n";
    std::cout << "\nreport written to " << out << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colcrush: compressed in-memory column codecs"};
  app.require_subcommand(1);

  GenFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a column file");
  add_gen_flags(gen, gen_flags);
  gen->add_option("--out", gen_out, "Output column file")->required();

  std::string enc_in, enc_scheme, enc_out;
  auto* enc = app.add_subcommand("encode", "Encode a column file");
  enc->add_option("input", enc_in, "Column file (.csv for CSV)")->required();
  enc->add_option("--scheme", enc_scheme, "word-dict|bit-dict|vl|vsl|vs|vsb|bitmap|huffman")->required();
  enc->add_option("--out", enc_out, "Output encoded file")->required();

  std::string dec_in, dec_out;
  auto* dec = app.add_subcommand("decode", "Decode an encoded file back to a column file");
  dec->add_option("input", dec_in, "Encoded file")->required();
  dec->add_option("--out", dec_out, "Output column file")->required();

  std::string q_in, q_pred, q_output = "count", q_project;
  auto* query = app.add_subcommand("query", "Run an EQ/LEQ predicate");
  query->add_option("input", q_in, "Encoded or raw column file")->required();
  query->add_option("--pred", q_pred, "name=value or name<=value")->required();
  query->add_option("--output", q_output, "What to print")
      ->check(CLI::IsMember({"count", "rows", "project"}))
      ->capture_default_str();
  query->add_option("--project", q_project, "Column file to project for --output project");

  std::string adv_in;
  GenFlags adv_flags;
  std::optional<std::uint64_t> adv_runs;
  auto* adv = app.add_subcommand("advise", "Recommend a scheme for a column or explicit stats");
  adv->add_option("input", adv_in, "Column file (omit to use the stats flags)");
  add_gen_flags(adv, adv_flags);
  adv->add_option("--run-count", adv_runs, "Known run count for RLE predictions");

  GenFlags bench_flags;
  int bench_runs = 5;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Space model and codec timing report");
  add_gen_flags(bench, bench_flags);
  bench->add_option("--runs", bench_runs, "Timed runs per query (median, after one warm-up)")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return run_gen(gen_flags, gen_out);
    if (*enc) return run_encode(enc_in, enc_scheme, enc_out);
    if (*dec) return run_decode(dec_in, dec_out);
    if (*query) return run_query(q_in, q_pred, q_output, q_project);
    if (*adv) return run_advise(adv_in, adv_flags, adv_runs);
    if (*bench) return run_bench(bench_flags, bench_runs, bench_out);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kFormat;
  } catch (const UnknownCodecError& e) {
    std::cerr << "unknown codec: " << e.what() << "\n";
    return kUnknownCodec;
  } catch (const TypeMismatchError& e) {
    std::cerr << "type mismatch: " << e.what() << "\n";
    return kTypeMismatch;
  } catch (const OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kOracleMismatch;
  } catch (const UnsortedColumnError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsorted;
  } catch (const CorruptStreamError& e) {
    std::cerr << "corrupt stream: " << e.what() << "\n";
    return kCorruptStream;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
