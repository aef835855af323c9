#include "fastph/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "fastph/generator.hpp"
#include "fastph/persistence.hpp"

namespace fastph::cli {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

void write_death(std::ostream& out, const std::optional<std::size_t>& death) {
  if (death) {
    out << *death;
  } else {
    out << "inf";
  }
}

void write_chain(std::ostream& out, std::size_t birth, const std::optional<std::size_t>& death,
                 const Chain& c) {
  out << "rep " << birth << ' ';
  write_death(out, death);
  out << " :";
  for (const auto& [idx, coef] : c.coefficients) out << ' ' << idx << '*' << coef;
  out << '\n';
}

void write_reps(std::ostream& out, const PersistenceDiagram& dgm, const RepresentativeSet& reps,
                RepresentativeSource which) {
  for (const auto& p : dgm) {
    if (which == RepresentativeSource::v) {
      if (auto it = reps.v_basis.find(p.birth); it != reps.v_basis.end()) {
        write_chain(out, p.birth, p.death, it->second);
      }
    } else if (p.death) {
      if (auto it = reps.r_basis.find(*p.death); it != reps.r_basis.end()) {
        write_chain(out, p.birth, p.death, it->second);
      }
    }
  }
}

void write_ops(std::ostream& out, const OpCounter& c) {
  out << "ops: mul=" << c.mul_count << " add=" << c.add_count << " inv=" << c.inv_count << '\n';
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    sizes.push_back(static_cast<std::size_t>(v));
  }
  if (sizes.empty()) throw std::invalid_argument(text);
  return sizes;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Filtration filt;
  FieldContext field;
  try {
    field = FieldContext(cfg.p);
    filt = parse_filtration(read_input(cfg.input));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const BoundaryMatrix d = boundary_matrix(filt, field);
  const ReductionOptions opts{cfg.leaf_size, cfg.strassen_cutoff};

  PersistenceDiagram dgm;
  RepresentativeSet vreps, rreps;
  Decomposition dec;
  VerificationReport report;
  if (cfg.cohomology) {
    CohomologyResult co = extract_cocycles(d, cfg.algorithm, opts);
    dgm = std::move(co.diagram);
    vreps = rreps = std::move(co.cocycles);
    if (cfg.verify) report = verify_decomposition(antitranspose(d), co.dual);
    dec = std::move(co.dual);
  } else {
    dec = reduce(d, cfg.algorithm, opts);
    dgm = extract_diagram(dec, d.dims);
    vreps = extract_v_representatives(dec, d.dims);
    rreps = extract_r_representatives(dec, d.dims);
    if (cfg.verify) report = verify_decomposition(d, dec);
  }

  for (const auto& p : dgm) {
    out << p.dim << '\t' << p.birth << '\t';
    write_death(out, p.death);
    out << '\n';
  }
  switch (cfg.representatives) {
    case Representatives::none: break;
    case Representatives::v: write_reps(out, dgm, vreps, RepresentativeSource::v); break;
    case Representatives::r: write_reps(out, dgm, rreps, RepresentativeSource::r); break;
    case Representatives::both:
      out << "# v-basis\n";
      write_reps(out, dgm, vreps, RepresentativeSource::v);
      out << "# r-basis\n";
      write_reps(out, dgm, rreps, RepresentativeSource::r);
      break;
  }
  if (cfg.count_ops) write_ops(out, dec.counter);

  if (cfg.verify) {
    for (const auto& c : report.checks) {
      err << "verify: " << c.name << ": " << (c.passed ? "ok" : "FAIL");
      if (!c.passed && !c.detail.empty()) err << " (" << c.detail << ')';
      err << '\n';
    }
    if (!report.ok()) return kExitVerifyFailed;
  }
  return kExitOk;
}

int bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  FieldContext field;
  try {
    field = FieldContext(cfg.p);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const ReductionOptions opts{cfg.leaf_size, cfg.strassen_cutoff};
  out << "# bench algorithm=" << algorithm_name(cfg.algorithm) << " field=" << cfg.p
      << " seed=" << cfg.seed << " leaf_size=" << cfg.leaf_size
      << " strassen_cutoff=" << cfg.strassen_cutoff << '\n';
  out << "n\tmul\tadd\tinv\tseconds\n";
  std::vector<std::uint64_t> muls;
  for (std::size_t n : cfg.bench_sizes) {
    const BoundaryMatrix d = boundary_matrix(random_filtration(n, cfg.seed), field);
    const auto t0 = std::chrono::steady_clock::now();
    const Decomposition dec = reduce(d, cfg.algorithm, opts);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    out << n << '\t' << dec.counter.mul_count << '\t' << dec.counter.add_count << '\t'
        << dec.counter.inv_count << '\t' << std::fixed << std::setprecision(4) << dt.count()
        << std::defaultfloat << '\n';
    muls.push_back(dec.counter.mul_count);
  }
  for (std::size_t k = 1; k < muls.size(); ++k) {
    out << "ratio " << cfg.bench_sizes[k] << '/' << cfg.bench_sizes[k - 1] << " mul=";
    if (muls[k - 1] == 0) {
      out << "nan\n";
    } else {
      out << std::fixed << std::setprecision(3)
          << static_cast<double>(muls[k]) / static_cast<double>(muls[k - 1]) << std::defaultfloat
          << '\n';
    }
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Persistence diagrams by R = DV reduction over a prime field"};
  RunConfig cfg;
  std::string algorithm = "fast-row";
  std::string reps = "none";
  std::string bench_sizes;

  app.add_option("input", cfg.input, ".flt filtration file, or - for standard input");
  app.add_option("--algorithm", algorithm, "lazy, exhaustive, row-incremental, fast-column, fast-row")
      ->check(CLI::IsMember({"lazy", "exhaustive", "row-incremental", "fast-column", "fast-row"}));
  app.add_option("--field", cfg.p, "prime modulus below 65536");
  app.add_flag("--cohomology", cfg.cohomology, "reduce the anti-transpose");
  app.add_option("--representatives", reps, "none, v, r or both")
      ->check(CLI::IsMember({"none", "v", "r", "both"}));
  app.add_flag("--verify", cfg.verify, "check the decomposition; exit 1 on failure");
  app.add_flag("--count-ops", cfg.count_ops, "print field operation tallies");
  app.add_option("--leaf-size", cfg.leaf_size, "base case size of the fast algorithms")
      ->check(CLI::PositiveNumber);
  app.add_option("--strassen-cutoff", cfg.strassen_cutoff, "naive multiplication at or below this size");
  app.add_option("--bench", bench_sizes, "comma separated sizes of random filtrations");
  app.add_option("--seed", cfg.seed, "seed for --bench");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  cfg.algorithm = *parse_algorithm(algorithm);
  static const std::map<std::string, Representatives> kReps{{"none", Representatives::none},
                                                            {"v", Representatives::v},
                                                            {"r", Representatives::r},
                                                            {"both", Representatives::both}};
  cfg.representatives = kReps.at(reps);

  if (!bench_sizes.empty()) {
    try {
      cfg.bench_sizes = parse_sizes(bench_sizes);
    } catch (const std::exception&) {
      err << "error: bad --bench list '" << bench_sizes << "'\n";
      return kExitInputError;
    }
    return bench(cfg, out, err);
  }
  if (cfg.input.empty()) {
    err << "error: no input file\n";
    return kExitInputError;
  }
  return run(cfg, out, err);
}

}  // namespace fastph::cli
