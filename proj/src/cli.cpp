#include "perlef/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "perlef/classifier.hpp"
#include "perlef/errors.hpp"
#include "perlef/harness.hpp"
#include "perlef/io.hpp"
#include "perlef/kernels.hpp"
#include "perlef/lefschetz.hpp"
#include "perlef/spectrum.hpp"

namespace perlef::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

/// Output of one command: text or JSON body plus exit code.
struct Rendered {
  std::string body;
  int code = kOk;
};

json merge(std::initializer_list<json> parts) {
  json out = json::object();
  for (const auto& p : parts) out.update(p);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void text_l_table(std::ostream& os, const LefschetzSequence& seq) {
  os << "m\tL(f^m)\n";
  for (std::size_t m = 1; m <= seq.max_m(); ++m) os << m << "\t" << seq.at(m).get_str() << "\n";
}

void text_spectrum(std::ostream& os, const SpectrumSummary& s) {
  os << "eigenvalues: " << s.n << "\n"
     << "  zero: " << s.zero_count << "\n"
     << "  roots of unity:";
  if (s.unity_orders.empty()) os << " none";
  for (auto k : s.unity_orders) os << " " << k;
  os << "\n  on circle, not roots of unity: " << s.circle_non_torsion_count << "\n"
     << "  outside unit disk: " << s.outside_count << "\n"
     << "  inside, nonzero: " << s.inside_nonzero_count << "\n"
     << "  max modulus class: " << to_string(s.radius_class) << "\n";
}

std::string verdict_phrase(Verdict v) {
  switch (v) {
    case Verdict::ForcedCaseA: return "forced case (a)";
    case Verdict::CaseBCompatible: return "compatible with case (b)";
    case Verdict::CaseCCompatible: return "compatible with case (c)";
  }
  return "?";
}

std::string render_classification(const GradedHomologyAction& action, const ClassificationResult& r,
                                  OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    json j = merge({io::classification_fragment(r), io::lefschetz_fragment(r.l_prefix),
                    io::spectrum_fragment(r.spectrum)});
    if (!action.name().empty()) j["name"] = action.name();
    return dump(j);
  }
  std::ostringstream os;
  if (!action.name().empty()) os << "name: " << action.name() << "\n";
  os << "verdict: " << verdict_phrase(r.verdict) << "\n";
  if (r.witness_m) os << "witness m=" << *r.witness_m << " (" << to_string(*r.witness_kind) << ")\n";
  os << "proof case: " << to_string(r.proof_case) << "\n"
     << "period set: " << period_set_statement(r).text << "\n"
     << r.narrative << "\n";
  text_l_table(os, r.l_prefix);
  return os.str();
}

Rendered classify_action(const GradedHomologyAction& action, const RunConfig& cfg) {
  try {
    return {render_classification(action, classify(action, cfg.hard_cap), cfg.output_format), kOk};
  } catch (const HypothesisShapeViolated& e) {
    return {std::string(e.what()) + "\n", kHypothesisViolated};
  } catch (const WitnessNotFound& e) {
    return {std::string(e.what()) + "\n", kWitnessNotFound};
  }
}

Rendered run_action_command(const GradedHomologyAction& action, const RunConfig& cfg) {
  const bool as_json = cfg.output_format == OutputFormat::Json;
  json named = json::object();
  if (!action.name().empty()) named["name"] = action.name();
  std::ostringstream os;
  if (!as_json && !action.name().empty()) os << "name: " << action.name() << "\n";

  switch (cfg.subcommand) {
    case Subcommand::Classify:
      return classify_action(action, cfg);
    case Subcommand::Lefschetz: {
      auto seq = lefschetz_sequence(action, cfg.max_m);
      if (as_json) return {dump(merge({named, io::lefschetz_fragment(seq)}))};
      text_l_table(os, seq);
      return {os.str()};
    }
    case Subcommand::Zeta: {
      if (auto shape = hypothesis_shape(action); !shape.satisfies_theorem_hypotheses)
        return {"zeta requires H_k = 0 for k > 1\n", kHypothesisViolated};
      auto z = zeta(action);
      if (as_json) return {dump(merge({named, io::zeta_fragment(z)}))};
      os << "zeta(t) = (" << z.numerator.to_string("t") << ") / (" << z.denominator.to_string("t") << ")\n";
      return {os.str()};
    }
    case Subcommand::Spectrum: {
      auto s = spectrum_summary(action.at(1));
      if (as_json) return {dump(merge({named, io::spectrum_fragment(s)}))};
      text_spectrum(os, s);
      return {os.str()};
    }
    case Subcommand::Harness:
      break;
  }
  throw std::logic_error("run_action_command: harness needs a map document");
}

std::string render_verification(const VerificationReport& r, OutputFormat fmt, const std::string& status) {
  if (fmt == OutputFormat::Json) {
    json j = io::verification_fragment(r);
    j["status"] = status;
    return dump(j);
  }
  std::ostringstream os;
  os << "strictly inside: " << (r.inside.strictly_inside ? "yes" : "no") << " (margin " << r.inside.margin
     << ", " << r.inside.samples << " boundary samples)\n"
     << "declared action verdict: " << verdict_phrase(r.classification.verdict) << "\n"
     << "m\t#Fix(f^m)\tL(f^m)\tbound\texact period\n";
  for (std::size_t i = 0; i < r.per_m.size(); ++i) {
    const auto& fp = r.per_m[i];
    os << fp.m << "\t" << fp.count << "\t" << fp.lefschetz_value.get_str() << "\t"
       << (fp.bound_satisfied ? "ok" : "VIOLATED") << "\t" << r.exact_period_counts[i] << "\n";
  }
  os << status << "\n";
  return os.str();
}

Rendered run_harness(const io::json& doc, const RunConfig& cfg) {
  MapSpec map = io::parse_map(doc);
  try {
    auto report = verify_theorem(map, cfg.max_m, cfg.grid_resolution);
    return {render_verification(report, cfg.output_format, "pass"), kOk};
  } catch (const TheoremViolation& v) {
    return {render_verification(v.report(), cfg.output_format, std::string("FAIL: ") + v.what()),
            kTheoremViolation};
  }
}

/// Runs a single input document; library errors map onto exit codes.
Rendered run_file(const std::string& path, const RunConfig& cfg) {
  try {
    const json doc = io::load_file(path);
    if (cfg.subcommand == Subcommand::Harness) return run_harness(doc, cfg);
    return run_action_command(io::parse_action(doc), cfg);
  } catch (const HypothesisShapeViolated& e) {
    return {std::string(e.what()) + "\n", kHypothesisViolated};
  } catch (const Error& e) {
    return {std::string(e.what()) + "\n", kMalformedInput};
  }
}

bool write_output(const std::string& path, const std::string& body, std::ostream& err) {
  std::ofstream f(path);
  if (!f) {
    err << "cannot write " << path << "\n";
    return false;
  }
  f << body;
  return true;
}

int run_directory(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.subcommand != Subcommand::Classify) {
    err << "directory input is supported for classify only\n";
    return kMalformedInput;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(cfg.input_path))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<Rendered> results(files.size());
  std::vector<GradedHomologyAction> actions;
  std::vector<std::size_t> slot;
  for (std::size_t i = 0; i < files.size(); ++i) {
    try {
      actions.push_back(io::parse_action(io::load_file(files[i].string())));
      slot.push_back(i);
    } catch (const Error& e) {
      results[i] = {std::string(e.what()) + "\n", kMalformedInput};
    }
  }
  auto outcomes = kernels::classify_batch(actions, cfg.hard_cap, kernels::Exec::Parallel);
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    auto& r = results[slot[k]];
    if (const auto* c = std::get_if<ClassificationResult>(&outcomes[k].result))
      r = {render_classification(actions[k], *c, cfg.output_format), kOk};
    else
      r = {std::get<std::string>(outcomes[k].result) + "\n", outcomes[k].exit_code};
  }

  int code = kOk;
  if (!cfg.out_path.empty()) fs::create_directories(cfg.out_path);
  for (std::size_t i = 0; i < files.size(); ++i) {
    code = std::max(code, results[i].code);
    if (!cfg.out_path.empty()) {
      const std::string ext = cfg.output_format == OutputFormat::Json ? ".json" : ".txt";
      fs::path target = fs::path(cfg.out_path) / (files[i].stem().string() + ext);
      if (!write_output(target.string(), results[i].body, err)) code = std::max(code, int{kMalformedInput});
    } else {
      (results[i].code == kOk ? out : err) << "== " << files[i].filename().string() << " ==\n" << results[i].body;
    }
  }
  return code;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_m == 0 || cfg.hard_cap == 0 || cfg.grid_resolution == 0) {
    err << "--max-m, --cap and --grid must be positive\n";
    return kMalformedInput;
  }
  if (cfg.max_m > cfg.hard_cap) {
    err << "--max-m must not exceed --cap\n";
    return kMalformedInput;
  }
  std::error_code ec;
  if (fs::is_directory(cfg.input_path, ec)) return run_directory(cfg, out, err);

  Rendered r = run_file(cfg.input_path, cfg);
  if (r.code != kOk && r.code != kTheoremViolation) {
    err << r.body;
    return r.code;
  }
  if (!cfg.out_path.empty()) {
    if (!write_output(cfg.out_path, r.body, err)) return kMalformedInput;
  } else {
    out << r.body;
  }
  return r.code;
}

int main(int argc, char** argv) {
  CLI::App app{"Lefschetz-number period analysis for holomorphic self-maps"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";

  const std::pair<const char*, Subcommand> commands[] = {
      {"classify", Subcommand::Classify},
      {"lefschetz", Subcommand::Lefschetz},
      {"zeta", Subcommand::Zeta},
      {"spectrum", Subcommand::Spectrum},
      {"harness", Subcommand::Harness},
  };
  const char* descriptions[] = {
      "decide which trichotomy cases the homology action leaves open",
      "print the Lefschetz numbers L(f^m)",
      "print the Lefschetz zeta function",
      "summarize eigenvalue locations of f_*1",
      "verify L(f^m) >= #Fix(f^m) on a concrete map",
  };
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    sub->add_option("input", cfg.input_path, "input JSON document (or directory for classify)")->required();
    sub->add_option("--max-m", cfg.max_m, "number of iterates to report")->capture_default_str();
    sub->add_option("--cap", cfg.hard_cap, "largest iterate searched for a witness")->capture_default_str();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    sub->add_option("--grid", cfg.grid_resolution, "Newton seed grid resolution")->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write output to this path");
    const Subcommand which = commands[i].second;
    sub->callback([&cfg, which] { cfg.subcommand = which; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformedInput;
  }
  cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  return run(cfg, std::cout, std::cerr);
}

}  // namespace perlef::cli
