// addcomb: command line front end for the certificate library.
//
// Every subcommand reads one instance (--group/--elements or --input), runs
// one computation and prints either a flat human listing or a JSON document.
// Exit codes: 0 success, 1 counterexample (verify), 2 usage or budget error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "addcomb/bounds.hpp"
#include "addcomb/covering.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/instance_io.hpp"
#include "addcomb/instances.hpp"
#include "addcomb/pipeline.hpp"
#include "addcomb/rectify.hpp"
#include "addcomb/report.hpp"
#include "addcomb/suite.hpp"
#include "addcomb/torsion.hpp"

using namespace addcomb;

namespace {

struct Common {
  std::string group;
  std::string elements;
  std::string input;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::string format = "human";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool instance = true) {
  if (instance) {
    cmd->add_option("--group", c.group, "cyclic:N | window:LO:HI | torsion:R:N, or a JSON group object");
    cmd->add_option("--elements", c.elements, "comma list (tuples as 1.0.1) or a JSON array");
    cmd->add_option("--input", c.input, "instance file {\"group\":...,\"elements\":[...]}");
  }
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--budget", c.budget, "work budget (meaning depends on the subcommand)");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"human", "structured"}));
  cmd->add_option("--out", c.out, "write output to a file instead of stdout");
}

GSet load_instance(const Common& c) {
  if (!c.input.empty()) return read_instance_file(c.input);
  if (c.group.empty() || c.elements.empty()) throw DomainError("give --input, or both --group and --elements");
  return parse_elements_text(parse_group_text(c.group), c.elements);
}

void emit(const Common& c, const Json& doc) {
  const std::string text = c.format == "structured" ? doc.dump(2) + "\n" : to_human(doc);
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw DomainError("cannot write " + c.out);
  f << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified computations on sumsets, spectra, coverings and rectification"};
  app.require_subcommand(1);

  // sumset
  Common sumset_opts;
  std::string sumset_other;
  std::string sumset_op = "sum";
  int sumset_k = 2;
  auto* sumset_cmd = app.add_subcommand("sumset", "A+B, A-B or kA, with doubling ratios");
  add_common(sumset_cmd, sumset_opts);
  sumset_cmd->add_option("--other", sumset_other, "elements of B (default: A)");
  sumset_cmd->add_option("--op", sumset_op, "operation")->check(CLI::IsMember({"sum", "difference", "iterated"}));
  sumset_cmd->add_option("--k", sumset_k, "k for --op iterated")->check(CLI::PositiveNumber);

  // diam
  Common diam_opts;
  auto* diam_cmd = app.add_subcommand("diam", "diameter of A in Z/N with a minimal progression");
  add_common(diam_cmd, diam_opts);

  // spectrum
  Common spec_opts;
  std::string spec_method = "auto";
  std::size_t spec_top = 8;
  auto* spec_cmd = app.add_subcommand("spectrum", "Fourier magnitudes, Parseval residual, largest coefficient");
  add_common(spec_cmd, spec_opts);
  spec_cmd->add_option("--method", spec_method, "transform")->check(CLI::IsMember({"auto", "direct", "fast"}));
  spec_cmd->add_option("--top", spec_top, "number of largest nonprincipal coefficients to list");

  // cover
  Common cover_opts;
  std::string cover_b1;
  std::string cover_b2;
  bool cover_no_witness = false;
  int cover_m = 0;
  auto* cover_cmd = app.add_subcommand("cover", "covering certificate B1-B1+B2-B2 in A-A+T-T");
  add_common(cover_cmd, cover_opts);
  cover_cmd->add_option("--b1", cover_b1, "elements of B1 (default: A)");
  cover_cmd->add_option("--b2", cover_b2, "elements of B2 (default: B1)");
  cover_cmd->add_flag("--no-witness", cover_no_witness, "skip the exhaustive witness search");
  cover_cmd->add_option("--m", cover_m, "also check (m+1)(A-A) in A-A+m(T-T) up to this m");

  // rectify
  Common rect_opts;
  int rect_k = 2;
  int rect_rounds = 16;
  auto* rect_cmd =
      app.add_subcommand("rectify", "F_k-isomorphic integer copy (Z/N, N prime) or a shorter model (integer set)");
  add_common(rect_cmd, rect_opts);
  rect_cmd->add_option("--k", rect_k, "order of the isomorphism")->check(CLI::Range(2, 64));
  rect_cmd->add_option("--rounds", rect_rounds, "rounds for integer sets")->check(CLI::PositiveNumber);

  // torsion-cover
  Common tors_opts;
  auto* tors_cmd = app.add_subcommand("torsion-cover", "coset of a subgroup containing A in (Z/r)^n");
  add_common(tors_cmd, tors_opts);

  // bounds
  Common bounds_opts;
  std::string bounds_alpha;
  std::optional<double> bounds_log_alpha;
  std::string bounds_K = "1";
  int bounds_k = 2;
  auto* bounds_cmd = app.add_subcommand("bounds", "explicit thresholds and the delta chain replay");
  add_common(bounds_cmd, bounds_opts, false);
  bounds_cmd->add_option("--alpha", bounds_alpha, "density in (0,1), e.g. 1/1000 or 1e-6");
  bounds_cmd->add_option("--log-alpha", bounds_log_alpha, "natural log of alpha, for tiny densities");
  bounds_cmd->add_option("--K", bounds_K, "doubling constant K >= 1");
  bounds_cmd->add_option("--k", bounds_k, "order k >= 2");
  bounds_cmd->add_option("--set-from", bounds_opts.input, "take alpha and K from an instance file");
  bool bounds_pipeline = false;
  bounds_cmd->add_flag("--pipeline", bounds_pipeline, "with --set-from: run the full pipeline on the set");

  // verify
  Common verify_opts;
  std::string verify_checks = "all";
  std::string verify_gen = "exhaustive";
  std::string verify_id = "suite";
  int verify_max = 3;
  int verify_size = 8;
  int verify_count = 100;
  bool verify_normalize = false;
  std::string verify_lengths = "5";
  auto* verify_cmd = app.add_subcommand("verify", "run lemma checks over an instance stream");
  add_common(verify_cmd, verify_opts, false);
  verify_cmd->add_option("--group", verify_opts.group, "ambient group for generated instances")->required();
  verify_cmd->add_option("--checks", verify_checks, "comma list, or 'all'");
  verify_cmd->add_option("--generator", verify_gen, "instance generator")
      ->check(CLI::IsMember({"exhaustive", "random", "structured"}));
  verify_cmd->add_option("--max-size", verify_max, "exhaustive: largest |A|");
  verify_cmd->add_option("--size", verify_size, "random: |A|");
  verify_cmd->add_option("--count", verify_count, "random: number of sets");
  verify_cmd->add_option("--lengths", verify_lengths, "structured: comma list of progression lengths");
  verify_cmd->add_flag("--normalize", verify_normalize, "exhaustive: one set per affine orbit");
  verify_cmd->add_option("--id", verify_id, "suite id recorded in the report");

  // enumerate
  Common enum_opts;
  std::string enum_gen = "exhaustive";
  int enum_max = 3;
  int enum_size = 8;
  int enum_count = 100;
  bool enum_normalize = false;
  std::string enum_lengths = "5";
  auto* enum_cmd = app.add_subcommand("enumerate", "print an instance stream");
  add_common(enum_cmd, enum_opts, false);
  enum_cmd->add_option("--group", enum_opts.group, "ambient group")->required();
  enum_cmd->add_option("--generator", enum_gen, "instance generator")
      ->check(CLI::IsMember({"exhaustive", "random", "structured"}));
  enum_cmd->add_option("--max-size", enum_max, "exhaustive: largest |A|");
  enum_cmd->add_option("--size", enum_size, "random: |A|");
  enum_cmd->add_option("--count", enum_count, "random: number of sets");
  enum_cmd->add_option("--lengths", enum_lengths, "structured: comma list of progression lengths");
  enum_cmd->add_flag("--normalize", enum_normalize, "exhaustive: one set per affine orbit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto make_spec = [](const Common& c, const std::string& gen, int max, int size, int count, bool normalize,
                      const std::string& lengths) {
    GeneratorSpec spec;
    spec.group = parse_group_text(c.group);
    spec.kind = gen == "random" ? GeneratorKind::kRandom
                                : (gen == "structured" ? GeneratorKind::kStructured : GeneratorKind::kExhaustive);
    spec.max_size = max;
    spec.size = size;
    spec.count = count;
    spec.seed = c.seed;
    spec.normalize = normalize;
    spec.lengths.clear();
    for (const std::string& l : split(lengths, ',')) spec.lengths.push_back(std::stoi(l));
    if (c.budget) spec.budget = *c.budget;
    return spec;
  };

  try {
    if (*sumset_cmd) {
      const GSet a = load_instance(sumset_opts);
      const GSet b = sumset_other.empty() ? a : parse_elements_text(a.group(), sumset_other);
      GSet result;
      if (sumset_op == "sum") {
        result = sumset(a, b);
      } else if (sumset_op == "difference") {
        result = difference_set(a, b);
      } else {
        result = iterated_sum(a, sumset_k);
      }
      Json doc{{"operation", sumset_op}, {"size", result.size()}, {"result", instance_to_json(result)}};
      if (!a.empty()) doc["doubling"] = to_json(doubling_ratio(a));
      emit(sumset_opts, doc);
    } else if (*diam_cmd) {
      const GSet a = load_instance(diam_opts);
      emit(diam_opts, to_json(diameter(a, diam_opts.budget ? static_cast<std::int64_t>(*diam_opts.budget)
                                                           : kDefaultDiameterBudget)));
    } else if (*spec_cmd) {
      const GSet a = load_instance(spec_opts);
      const SpectrumMethod m = spec_method == "direct" ? SpectrumMethod::kDirect
                               : spec_method == "fast" ? SpectrumMethod::kFast
                                                       : SpectrumMethod::kAuto;
      emit(spec_opts, to_json(spectrum(a, m), spec_top));
    } else if (*cover_cmd) {
      const GSet a = load_instance(cover_opts);
      const GSet b1 = cover_b1.empty() ? a : parse_elements_text(a.group(), cover_b1);
      const GSet b2 = cover_b2.empty() ? b1 : parse_elements_text(a.group(), cover_b2);
      const std::size_t budget = cover_opts.budget ? *cover_opts.budget : kDefaultWitnessBudget;
      CoveringCertificate c = covering_certificate(a, b1, b2, !cover_no_witness, budget);
      if (cover_m > 0) c.m_checked = verify_incm(a, c.translates, cover_m);
      emit(cover_opts, to_json(c));
    } else if (*rect_cmd) {
      const GSet a = load_instance(rect_opts);
      const std::uint64_t budget = rect_opts.budget ? *rect_opts.budget : kDefaultIsoBudget;
      if (a.group().is_window()) {
        emit(rect_opts, to_json(minimal_integer_model(a, rect_k, rect_rounds, kDefaultDiameterBudget, budget)));
      } else {
        emit(rect_opts, to_json(rectify(a, rect_k, budget)));
      }
    } else if (*tors_cmd) {
      const GSet a = load_instance(tors_opts);
      const std::size_t budget = tors_opts.budget ? *tors_opts.budget : kDefaultWitnessBudget;
      emit(tors_opts, to_json(torsion_cover(a, budget)));
    } else if (*bounds_cmd) {
      const Rational big_k = parse_rational(bounds_K);
      if (!bounds_opts.input.empty()) {
        const GSet a = read_instance_file(bounds_opts.input);
        if (bounds_pipeline) {
          emit(bounds_opts, to_json(theorem1_pipeline(a)));
        } else {
          const DoublingRatios r = doubling_ratio(a);
          emit(bounds_opts, to_json(bound_calculator(make_rational(static_cast<std::int64_t>(a.size()), a.group().order()),
                                                     r.min, bounds_k)));
        }
      } else if (bounds_log_alpha) {
        emit(bounds_opts, to_json(bound_calculator_log(*bounds_log_alpha, big_k, bounds_k)));
      } else if (!bounds_alpha.empty()) {
        emit(bounds_opts, to_json(bound_calculator(parse_rational(bounds_alpha), big_k, bounds_k)));
      } else {
        // Default: evaluate at the first theorem's own threshold.
        const auto t = threshold_thm1(big_k);
        if (t) {
          emit(bounds_opts, to_json(bound_calculator(*t, big_k, bounds_k)));
        } else {
          const double log_t = -12.0 * to_double(big_k * big_k) * std::log(16.0 * to_double(big_k));
          emit(bounds_opts, to_json(bound_calculator_log(log_t, big_k, bounds_k)));
        }
      }
    } else if (*verify_cmd) {
      SuiteConfig cfg;
      cfg.id = verify_id;
      cfg.checks = split(verify_checks, ',');
      cfg.generator = make_spec(verify_opts, verify_gen, verify_max, verify_size, verify_count, verify_normalize,
                                verify_lengths);
      const SuiteReport report = run_suite(cfg);
      emit(verify_opts, to_json(report));
      std::fprintf(stderr, "%zu instances, %zu counterexamples, %.2fs\n", report.instance_count,
                   report.counterexamples.size(), report.seconds);
      return report.exit_code();
    } else if (*enum_cmd) {
      const GeneratorSpec spec =
          make_spec(enum_opts, enum_gen, enum_max, enum_size, enum_count, enum_normalize, enum_lengths);
      Json doc = Json::array();
      for (const Instance& inst : enumerate_instances(spec)) {
        Json item{{"id", inst.id}, {"family", inst.family}};
        item["instance"] = instance_to_json(inst.set);
        doc.push_back(std::move(item));
      }
      if (enum_opts.format == "structured") {
        emit(enum_opts, doc);
      } else {
        std::string text;
        for (const Json& item : doc) {
          text += item["id"].get<std::string>() + " " + item["instance"]["elements"].dump() + "\n";
        }
        if (enum_opts.out.empty()) {
          std::cout << text;
        } else {
          std::ofstream(enum_opts.out) << text;
        }
      }
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "addcomb: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "addcomb: %s\n", e.what());
    return 2;
  }
  return 0;
}
