// polarwt: low-weight spectra of decreasing monomial codes.
//
//   polarwt construct --m 7 --imin-rows 23,44,50,70,73 --out code.json
//   polarwt spectrum --code code.json
//   polarwt brute --code code.json --k-cap 36
//   polarwt bound --code code.json --ebn0 0:0.5:6 --out bound.csv
//   polarwt verify --random 50 --random-m 5 --seed 7

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "polarwt/analysis.hpp"
#include "polarwt/json_io.hpp"
#include "polarwt/monomial_code.hpp"
#include "polarwt/oracle.hpp"
#include "polarwt/spectrum.hpp"

namespace {

using namespace polarwt;

enum Exit { kOk = 0, kUsage = 2, kValidation = 3, kInvariant = 4 };

struct CodeArgs {
  std::string code_path;
  int m = 0;
  std::vector<std::uint64_t> imin_rows;
  std::vector<std::uint64_t> info_rows;
  std::vector<std::uint32_t> imin_masks;
  std::vector<int> rm;

  void attach(CLI::App* cmd) {
    cmd->add_option("--code", code_path, "code-spec JSON file")->check(CLI::ExistingFile);
    cmd->add_option("--m", m, "number of variables")->check(CLI::Range(1, 20));
    cmd->add_option("--imin-rows", imin_rows, "generator rows, closed under the order")->delimiter(',');
    cmd->add_option("--info-rows", info_rows, "explicit information rows (must be decreasing)")->delimiter(',');
    cmd->add_option("--imin-masks", imin_masks, "generator monomials as variable bitmasks")->delimiter(',');
    cmd->add_option("--rm", rm, "Reed-Muller code m,r")->delimiter(',')->expected(2);
  }

  int sources() const {
    return !code_path.empty() + !imin_rows.empty() + !info_rows.empty() + !imin_masks.empty() + !rm.empty();
  }

  InfoSet load() const {
    if (sources() != 1)
      throw CLI::ValidationError("code", "give exactly one of --code, --imin-rows, --info-rows, --imin-masks, --rm");
    if (!code_path.empty()) {
      std::ifstream in(code_path);
      if (!in) throw SpecError("cannot read " + code_path);
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_code_spec(ss.str());
    }
    if (!rm.empty()) return construct_rm(rm[0], rm[1]);
    if (m == 0) throw CLI::ValidationError("--m", "required with row or mask lists");
    if (!imin_rows.empty()) return InfoSet::closure_of_rows(imin_rows, m);
    if (!info_rows.empty()) return InfoSet::from_rows(m, info_rows);
    std::vector<Monomial> gens;
    for (auto s : imin_masks) gens.emplace_back(s);
    return decreasing_closure(gens, m);
  }
};

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_params(std::ostream& os, const InfoSet& info) {
  const auto p = code_params(info);
  os << "m=" << info.m() << " K=" << p.k << " r=" << p.r << " w_min=" << p.w_min << "\n";
}

std::string count_text(const BigCount& v, bool scientific) {
  std::string s = to_decimal(v);
  if (scientific) s += " (" + to_scientific(v, 4) + ")";
  return s;
}

void print_table(const WeightSpectrum& s, bool scientific) {
  std::printf("m=%d K=%zu r=%d w_min=%llu%s\n", s.m, s.k, s.r, static_cast<unsigned long long>(s.w_min),
              s.oracle ? " (exhaustive)" : "");
  if (s.oracle) {
    std::printf("%8s %4s  %s\n", "weight", "mu", "count");
    for (const auto& [w, e] : s.entries)
      std::printf("%8llu %4d  %s\n", static_cast<unsigned long long>(w), e.mu, count_text(e.total, scientific).c_str());
    return;
  }
  std::printf("%8s %4s  %-24s %-24s %s\n", "weight", "mu", "total", "type1", "type2");
  for (const auto& [w, e] : s.entries)
    std::printf("%8llu %4d  %-24s %-24s %s\n", static_cast<unsigned long long>(w), e.mu,
                count_text(e.total, scientific).c_str(), count_text(e.type1, scientific).c_str(),
                count_text(e.type2, scientific).c_str());
}

// Checks the integrity conditions every computed spectrum must satisfy.
void check_invariants(const WeightSpectrum& s) {
  for (const auto& [w, e] : s.entries) {
    if (e.split && e.type1 + e.type2 != e.total) throw std::logic_error("type split does not add up");
    if (e.mu >= 2 && e.total % 2 != 0) throw std::logic_error("odd count at weight " + std::to_string(w));
  }
}

// Enumerator against oracle on every weight below twice the minimum.
bool compare(const InfoSet& info, unsigned threads, unsigned k_cap, bool verbose) {
  const auto formula = full_spectrum(info, threads);
  const auto brute = brute_spectrum(info, 2 * formula.w_min, {k_cap, threads});
  bool ok = weight_shape_check(brute, formula.m, formula.r);
  if (!ok && verbose) std::printf("  oracle spectrum has an unshaped weight\n");
  std::set<std::uint64_t> weights;
  for (const auto& [w, e] : formula.entries) weights.insert(w);
  for (const auto& [w, e] : brute.entries) weights.insert(w);
  for (auto w : weights) {
    const auto a = formula.count(w);
    const auto b = brute.count(w);
    if (verbose)
      std::printf("  weight %-6llu enumerator %-16s oracle %-16s %s\n", static_cast<unsigned long long>(w),
                  to_decimal(a).c_str(), to_decimal(b).c_str(), a == b ? "agree" : "MISMATCH");
    ok = ok && a == b;
  }
  return ok;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact low-weight spectra of decreasing monomial codes"};
  app.require_subcommand(1);

  CodeArgs code;
  std::string out_path;
  unsigned threads = default_threads();
  bool scientific = false;
  bool as_json = false;

  auto* construct = app.add_subcommand("construct", "build and normalize a code spec");
  code.attach(construct);
  std::vector<double> bec;
  std::vector<int> pw;
  construct->add_option("--bec", bec, "erasure-channel construction m,K,erasure_prob")->delimiter(',')->expected(3);
  construct->add_option("--pw", pw, "polarization-weight construction m,K")->delimiter(',')->expected(2);
  construct->add_option("--out", out_path, "write the code spec here instead of stdout");

  auto* spectrum = app.add_subcommand("spectrum", "closed-form spectrum below twice the minimum weight");
  code.attach(spectrum);
  std::optional<int> only_mu;
  spectrum->add_option("--mu", only_mu, "restrict to one mu");
  spectrum->add_option("--out", out_path, "write spectrum JSON here");
  spectrum->add_flag("--json", as_json, "print JSON instead of a table");
  spectrum->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  spectrum->add_flag("--scientific", scientific, "append approximate scientific notation");

  auto* brute = app.add_subcommand("brute", "exhaustive codeword tally");
  code.attach(brute);
  unsigned k_cap = kDefaultKCap;
  auto add_cap = [&](CLI::App* c) {
    c->add_option("--k-cap", k_cap, "largest K to enumerate (override up to 40)")->check(CLI::Range(1u, kMaxKCap));
  };
  add_cap(brute);
  brute->add_option("--out", out_path, "write spectrum JSON here");
  brute->add_flag("--json", as_json, "print JSON instead of a table");
  brute->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  brute->add_flag("--scientific", scientific, "append approximate scientific notation");

  auto* bound = app.add_subcommand("bound", "union bound over BPSK/AWGN as CSV");
  code.attach(bound);
  std::string spectrum_path;
  std::optional<double> rate;
  std::string ebn0_grid = "0:0.5:8";
  std::string sigma_list;
  bound->add_option("--spectrum", spectrum_path, "spectrum JSON produced by 'spectrum'")->check(CLI::ExistingFile);
  bound->add_option("--rate", rate, "code rate (defaults to K/N)");
  bound->add_option("--ebn0", ebn0_grid, "Eb/N0 grid in dB, start:step:stop or a comma list");
  bound->add_option("--sigma", sigma_list, "noise standard deviations, bypassing the Eb/N0 mapping");
  bound->add_option("--out", out_path, "write CSV here instead of stdout");
  bound->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "compare the closed form with the exhaustive oracle");
  code.attach(verify);
  add_cap(verify);
  unsigned random_count = 0;
  int random_m = 5;
  std::size_t max_k = 22;
  std::uint64_t seed = 1;
  verify->add_option("--random", random_count, "check this many random decreasing codes instead");
  verify->add_option("--random-m", random_m, "variables for random codes")->check(CLI::Range(1, 8));
  verify->add_option("--max-k", max_k, "largest K for random codes");
  verify->add_option("--seed", seed, "seed for random codes");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  if (construct->parsed()) {
    InfoSet info;
    if (!bec.empty() || !pw.empty()) {
      if (code.sources() || (!bec.empty() && !pw.empty())) throw CLI::ValidationError("construct", "give one code source");
      info = !bec.empty() ? construct_bec(static_cast<int>(bec[0]), static_cast<std::size_t>(bec[1]), bec[2])
                          : construct_pw(pw[0], static_cast<std::size_t>(pw[1]));
    } else {
      info = code.load();
    }
    const std::string text = format_code_spec(info) + "\n";
    if (out_path.empty()) {
      std::cout << text;
      print_params(std::cerr, info);
    } else {
      write_text(out_path, text);
      print_params(std::cout, info);
    }
    return kOk;
  }

  if (spectrum->parsed()) {
    const InfoSet info = code.load();
    const auto s = full_spectrum(info, threads, only_mu);
    check_invariants(s);
    if (!out_path.empty()) write_text(out_path, format_spectrum(s) + "\n");
    if (as_json) std::cout << format_spectrum(s) << "\n";
    else print_table(s, scientific);
    return kOk;
  }

  if (brute->parsed()) {
    const InfoSet info = code.load();
    const auto p = code_params(info);
    const auto s = brute_spectrum(info, 2 * p.w_min, {k_cap, threads});
    if (!out_path.empty()) write_text(out_path, format_spectrum(s) + "\n");
    if (as_json) std::cout << format_spectrum(s) << "\n";
    else print_table(s, scientific);
    if (!weight_shape_check(s, info.m(), p.r)) throw std::logic_error("oracle found a weight outside the admissible shapes");
    return kOk;
  }

  if (bound->parsed()) {
    WeightSpectrum s;
    if (!spectrum_path.empty()) {
      if (code.sources()) throw CLI::ValidationError("bound", "give either --spectrum or a code");
      s = parse_spectrum(read_text(spectrum_path));
    } else {
      s = full_spectrum(code.load(), threads);
    }
    const double r = rate ? *rate : static_cast<double>(s.k) / static_cast<double>(std::uint64_t{1} << s.m);
    std::vector<BoundPoint> pts;
    try {
      pts = sigma_list.empty() ? union_bound(s, r, parse_grid(ebn0_grid)) : union_bound_sigma(s, r, parse_grid(sigma_list));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("bound", e.what());
    }
    const std::string csv = bound_csv(pts);
    if (out_path.empty()) std::cout << csv;
    else write_text(out_path, csv);
    return kOk;
  }

  // verify
  if (random_count == 0) {
    const InfoSet info = code.load();
    print_params(std::cout, info);
    const bool ok = compare(info, threads, k_cap, true);
    std::printf("%s\n", ok ? "all weights agree" : "DISAGREEMENT");
    return ok ? kOk : kValidation;
  }
  if (code.sources()) throw CLI::ValidationError("verify", "--random replaces the code arguments");
  std::mt19937_64 rng(seed);
  unsigned bad = 0;
  for (unsigned i = 0; i < random_count; ++i) {
    const auto info = random_decreasing_code(random_m, std::min<std::size_t>(max_k, k_cap), rng);
    const bool ok = compare(info, threads, k_cap, false);
    std::printf("%s m=%d K=%zu rows=%s\n", ok ? "agree   " : "MISMATCH", info.m(), info.size(),
                format_code_spec(info).c_str());
    bad += !ok;
  }
  std::printf("%u of %u codes agree\n", random_count - bad, random_count);
  return bad ? kValidation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotDecreasingError& e) {
    std::cerr << "error: " << e.what() << " (violating pair " << e.violation().missing.to_string() << " <= "
              << e.violation().present.to_string() << ")\n";
    return kValidation;
  } catch (const std::logic_error& e) {
    // invalid_argument and out_of_range are input problems; other logic
    // errors mean an internal invariant broke
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
        dynamic_cast<const std::domain_error*>(&e)) {
      std::cerr << "error: " << e.what() << "\n";
      return kValidation;
    }
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
