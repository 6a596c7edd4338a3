#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "quasitone/errors.hpp"
#include "quasitone/numbertheory/approximants.hpp"
#include "quasitone/numbertheory/continued_fraction.hpp"
#include "quasitone/numbertheory/real.hpp"
#include "quasitone/quasicore/independence.hpp"
#include "quasitone/quasicore/quasiperiod.hpp"
#include "quasitone/render/synth.hpp"
#include "quasitone/render/wav.hpp"
#include "quasitone/score/config.hpp"
#include "quasitone/score/schedule.hpp"
#include "quasitone/words/complexity.hpp"
#include "quasitone/words/substitution.hpp"

namespace quasitone::cli {

namespace {

constexpr unsigned kPlaces = 10;

// Flag problems detected before any core call.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nt::Real expression(const std::string& text, const char* flag) {
  try {
    return nt::parse_real(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

nt::ApproximantKind kind_flag(const std::string& text) {
  try {
    return nt::parse_approximant_kind(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--kind: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoFailure("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct ApproxOptions {
  std::string value;
  std::uint64_t max_den = 0;
  std::string kind = "second";
  std::size_t cf_terms = 0;
};

void approx(const ApproxOptions& o, std::ostream& out) {
  nt::Real x = expression(o.value, "value");
  if (o.cf_terms > 0) {
    nt::ContinuedFraction cf = nt::expand_cf(x, o.cf_terms);
    auto conv = nt::convergents(cf);
    out << "# continued fraction of " << o.value << " terms=" << cf.coefficients.size()
        << " terminated=" << (cf.terminated ? "true" : "false") << '\n';
    out << "# k\tcoefficient\tconvergent\n";
    for (std::size_t k = 0; k < cf.coefficients.size(); ++k) {
      out << k << '\t' << cf.coefficients[k] << '\t' << conv[k] << '\n';
    }
    return;
  }
  if (o.max_den == 0) {
    throw UsageError("--max-den is required unless --cf is given");
  }
  nt::ApproximantKind kind = kind_flag(o.kind);
  auto list = nt::best_approximants(x, o.max_den, kind);
  out << "# best approximants of " << o.value << " kind=" << nt::to_string(kind)
      << " max-den=" << o.max_den << '\n';
  out << "# approximant\tvalue\terror\n";
  for (const auto& f : list) {
    out << f << '\t' << f.to_decimal(kPlaces) << '\t'
        << nt::approximation_error(x, f, kind).to_decimal(kPlaces) << '\n';
  }
}

struct WordOptions {
  std::string rule;
  std::string axiom;
  std::size_t iterations = 0;
  std::size_t max_length = words::kDefaultMaxLength;
  bool fibonacci = false;
  std::size_t length = 0;
  std::size_t complexity = 0;
};

void word(const WordOptions& o, std::ostream& out) {
  words::Word w;
  if (o.fibonacci) {
    if (o.length == 0) throw UsageError("--fibonacci needs --length");
    w = words::fibonacci_word(o.length);
  } else {
    if (o.rule.empty() || o.axiom.empty()) {
      throw UsageError("word needs --rule and --axiom, or --fibonacci");
    }
    std::optional<words::SubstitutionRule> rule;
    try {
      rule.emplace(words::SubstitutionRule::parse(o.rule));
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--rule: ") + e.what());
    }
    w = words::expand(*rule, o.axiom, o.iterations, o.max_length);
  }
  out << w.symbols << '\n';
  if (o.complexity > 0) {
    out << "# " << w.provenance << '\n';
    out << "# n\tsigma\n";
    for (std::size_t n = 1; n <= o.complexity; ++n) {
      out << n << '\t' << words::complexity(w.symbols, n) << '\n';
    }
    if (2 * o.complexity <= w.size()) {
      auto report = words::classify_morse_hedlund(w.symbols, o.complexity);
      out << "# morse-hedlund " << words::to_string(report.verdict);
      if (report.first_flagged) out << " first-flagged=" << *report.first_flagged;
      out << " (" << words::MorseHedlundReport::kCaveat << ")\n";
    }
  }
}

struct QuasiperiodOptions {
  std::string p1;
  std::string p2;
  std::uint64_t max_den = 0;
  std::string kind = "second";
};

void quasiperiod(const QuasiperiodOptions& o, std::ostream& out) {
  nt::Real p1 = expression(o.p1, "--p1");
  nt::Real p2 = expression(o.p2, "--p2");
  nt::ApproximantKind kind = kind_flag(o.kind);
  auto reports = quasi::quasiperiods(p1, p2, o.max_den, kind);
  out << "# quasiperiods p1=" << o.p1 << " p2=" << o.p2 << " kind=" << nt::to_string(kind)
      << " max-den=" << o.max_den << '\n';
  out << "# quasiperiod is the smaller element of the coincidence pair\n";
  out << "# approximant\tfirst\tsecond\tgap\tquasiperiod\tverified\n";
  for (const auto& r : reports) {
    bool ok = quasi::verify_near_coincidence(p1, p2, r, 1e-12);
    out << r.approximant << '\t' << r.first.to_decimal(kPlaces) << '\t'
        << r.second.to_decimal(kPlaces) << '\t' << r.gap.to_decimal(kPlaces) << '\t'
        << r.quasiperiod.to_decimal(kPlaces) << '\t' << (ok ? "true" : "false") << '\n';
  }
}

void independent(const std::vector<std::string>& values, std::ostream& out) {
  std::vector<quasi::GoldenReal> omegas;
  for (const auto& v : values) {
    omegas.push_back(expression(v, "value").to_golden());
  }
  auto result = quasi::rationally_independent(omegas);
  out << "independent\t" << (result.independent ? "true" : "false") << '\n';
  if (!result.independent) {
    out << "witness";
    for (const auto& y : result.witness) out << '\t' << y;
    out << '\n';
  }
}

void period(const std::vector<std::string>& values, std::ostream& out) {
  std::vector<nt::BigInt> cycles;
  for (const auto& v : values) {
    nt::Fraction f = [&] {
      try {
        return nt::Fraction::parse(v);
      } catch (const InvalidArgument& e) {
        throw UsageError(std::string("period: ") + e.what());
      }
    }();
    if (!f.is_integer() || f.sign() <= 0) {
      throw UsageError("period: cycle lengths must be positive integers, got " + v);
    }
    cycles.push_back(f.numerator());
  }
  out << score::combined_period(cycles) << '\n';
}

struct ComposeOptions {
  std::string preset;
  std::string score_file;
  std::string horizon;
  std::string out_file;
  std::string events_file;
  std::string raw_file;
  std::uint32_t sample_rate = 44100;
  double gain = 0.25;
  double tau = 0.6;
};

void compose(const ComposeOptions& o, std::ostream& out, std::ostream& err) {
  if (o.preset.empty() == o.score_file.empty()) {
    throw UsageError("compose needs exactly one of --preset or --score");
  }
  if (!o.preset.empty() && o.preset != "raindrops") {
    throw UsageError("unknown preset '" + o.preset + "' (available: raindrops)");
  }
  std::optional<nt::Fraction> horizon;
  if (!o.horizon.empty()) {
    try {
      horizon = nt::Fraction::parse(o.horizon);
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--horizon: ") + e.what());
    }
    if (horizon->sign() <= 0) throw UsageError("--horizon must be positive");
  }
  render::RenderConfig config;
  config.sample_rate = o.sample_rate;
  config.master_gain = o.gain;
  config.envelope.decay_time_constant = o.tau;
  try {
    config.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }

  score::Score piece = o.preset.empty() ? score::parse_score(read_file(o.score_file))
                                        : score::raindrops_preset();
  if (!horizon) horizon = piece.horizon;
  if (!horizon) throw UsageError("--horizon is required (the score sets none)");
  for (const auto& w : piece.warnings) err << "warning: " << w << '\n';

  score::EventTimeline timeline = score::schedule(piece, *horizon);
  std::vector<double> samples = render::render(timeline, config);
  render::write_wav(samples, config, std::filesystem::path(o.out_file));
  if (!o.events_file.empty()) {
    std::ofstream events(o.events_file, std::ios::trunc);
    if (!events) throw IoFailure("cannot open " + o.events_file);
    score::write_timeline(events, timeline);
  }
  if (!o.raw_file.empty()) {
    std::ofstream raw(o.raw_file, std::ios::trunc);
    if (!raw) throw IoFailure("cannot open " + o.raw_file);
    render::write_raw_samples(samples, raw);
  }
  double peak = 0.0;
  for (double s : samples) peak = std::max(peak, std::abs(s));
  out << "# compose " << (o.preset.empty() ? o.score_file : o.preset) << '\n';
  out << "events\t" << timeline.events.size() << '\n';
  out << "samples\t" << samples.size() << '\n';
  out << "peak\t" << std::fixed << std::setprecision(kPlaces) << peak << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quasitone: quasiperiodic music and aperiodic-order tools", "quasitone"};
  app.require_subcommand(1);

  ApproxOptions approx_opts;
  auto* approx_cmd = app.add_subcommand("approx", "best rational approximants of a value");
  approx_cmd->add_option("value", approx_opts.value, "expression, e.g. pi, phi, 7/3, 2*pi")
      ->required();
  approx_cmd->add_option("--max-den", approx_opts.max_den, "largest denominator")
      ->check(CLI::PositiveNumber);
  approx_cmd->add_option("--kind", approx_opts.kind, "first or second (default second)")
      ->check(CLI::IsMember({"first", "second"}));
  approx_cmd->add_option("--cf", approx_opts.cf_terms,
                         "print this many continued-fraction terms and convergents instead")
      ->check(CLI::PositiveNumber);

  WordOptions word_opts;
  auto* word_cmd = app.add_subcommand("word", "substitution words and factor complexity");
  word_cmd->add_option("--rule", word_opts.rule, "rules such as \"A:AB,B:A\"");
  word_cmd->add_option("--axiom", word_opts.axiom, "starting word");
  word_cmd->add_option("--iters", word_opts.iterations, "number of rewriting steps");
  word_cmd->add_option("--max-length", word_opts.max_length, "truncate longer words")
      ->check(CLI::PositiveNumber);
  word_cmd->add_flag("--fibonacci", word_opts.fibonacci, "Fibonacci word by concatenation");
  word_cmd->add_option("--length", word_opts.length, "Fibonacci prefix length")
      ->check(CLI::PositiveNumber);
  word_cmd->add_option("--complexity", word_opts.complexity, "print sigma(n) for n = 1..N")
      ->check(CLI::PositiveNumber);

  QuasiperiodOptions qp_opts;
  auto* qp_cmd = app.add_subcommand("quasiperiod", "near-coincidences of two periods");
  qp_cmd->add_option("--p1", qp_opts.p1, "first period")->required();
  qp_cmd->add_option("--p2", qp_opts.p2, "second period")->required();
  qp_cmd->add_option("--max-den", qp_opts.max_den, "largest approximant denominator")
      ->required()
      ->check(CLI::PositiveNumber);
  qp_cmd->add_option("--kind", qp_opts.kind, "first or second (default second)")
      ->check(CLI::IsMember({"first", "second"}));

  std::vector<std::string> independent_values;
  auto* ind_cmd = app.add_subcommand("independent", "rational independence over Q(phi)");
  ind_cmd->add_option("values", independent_values, "nonzero values")->required();

  std::vector<std::string> period_values;
  auto* period_cmd = app.add_subcommand("period", "combined period (lcm) of cycle lengths");
  period_cmd->add_option("cycles", period_values, "positive integers")->required();

  ComposeOptions compose_opts;
  auto* compose_cmd = app.add_subcommand("compose", "schedule and render a score to WAV");
  compose_cmd->add_option("--preset", compose_opts.preset, "built-in score (raindrops)");
  compose_cmd->add_option("--score", compose_opts.score_file, "score file");
  compose_cmd->add_option("--horizon", compose_opts.horizon, "seconds to render");
  compose_cmd->add_option("--out", compose_opts.out_file, "output WAV path")->required();
  compose_cmd->add_option("--events", compose_opts.events_file, "timeline TSV path");
  compose_cmd->add_option("--raw", compose_opts.raw_file, "raw sample text path");
  compose_cmd->add_option("--sample-rate", compose_opts.sample_rate, "Hz (default 44100)");
  compose_cmd->add_option("--gain", compose_opts.gain, "master gain (default 0.25)");
  compose_cmd->add_option("--tau", compose_opts.tau, "bell decay constant in s (default 0.6)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (approx_cmd->parsed()) {
      approx(approx_opts, out);
    } else if (word_cmd->parsed()) {
      word(word_opts, out);
    } else if (qp_cmd->parsed()) {
      quasiperiod(qp_opts, out);
    } else if (ind_cmd->parsed()) {
      independent(independent_values, out);
    } else if (period_cmd->parsed()) {
      period(period_values, out);
    } else if (compose_cmd->parsed()) {
      compose(compose_opts, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace quasitone::cli
