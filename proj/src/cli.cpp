#include "palsum/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "palsum/analysis.hpp"
#include "palsum/bounds.hpp"
#include "palsum/digits.hpp"

namespace palsum::cli {

namespace {

using nlohmann::json;

const char* format_name(Format f) {
  switch (f) {
    case Format::text: return "text";
    case Format::csv: return "csv";
    case Format::json: return "json";
  }
  return "?";
}

struct Context {
  OutputConfig config;
  std::ostream& out;
  std::ostream& err;

  int digits(int fallback) const { return config.decimal_digits.value_or(fallback); }

  BoundsConfig bounds() const {
    BoundsConfig b;
    b.precision_bits = config.precision_bits;
    b.term_budget = config.term_budget;
    b.threads = config.threads;
    return b;
  }

  ExactOptions exact() const { return ExactOptions{config.term_budget, config.threads}; }

  json envelope(const std::string& command, int digits) const {
    return json{{"command", command},
                {"config",
                 {{"format", format_name(config.format)},
                  {"digits", digits},
                  {"precision_bits", config.precision_bits},
                  {"term_budget", config.term_budget}}},
                {"rows", json::array()}};
  }

  void emit(const json& doc) const { out << doc.dump() << '\n'; }
};

void check_positive(const char* what, std::int64_t v, std::int64_t min) {
  if (v < min)
    throw std::invalid_argument(std::string(what) + " must be >= " + std::to_string(min) +
                                ", got " + std::to_string(v));
}

Base make_base(const char* what, std::int64_t v) {
  check_positive(what, v, 2);
  return Base(static_cast<std::uint64_t>(v));
}

// ---------------------------------------------------------------- commands

int cmd_bounds(const Context& ctx, std::int64_t base, int ell, int m) {
  const Base b = make_base("--base", base);
  const BoundParams params(ell, m);
  const int digits = ctx.digits(7);
  const BoundPair bp = series_bounds(b, params, ctx.bounds());
  const std::string lo = bp.lower.lower_decimal(digits);
  const std::string hi = bp.upper.upper_decimal(digits);
  switch (ctx.config.format) {
    case Format::text:
      ctx.out << "lower " << lo << "\nupper " << hi << '\n';
      break;
    case Format::csv:
      ctx.out << "b,ell,m,lower,upper\n" << base << ',' << ell << ',' << m << ',' << lo << ',' << hi << '\n';
      break;
    case Format::json: {
      json doc = ctx.envelope("bounds", digits);
      doc["rows"].push_back({{"b", base}, {"ell", ell}, {"m", m}, {"lower", lo}, {"upper", hi}});
      ctx.emit(doc);
      break;
    }
  }
  return kExitOk;
}

int cmd_table1(const Context& ctx, std::int64_t b_min, std::int64_t b_max) {
  check_positive("--min", b_min, 3);
  if (b_max < b_min) throw std::invalid_argument("--max must be >= --min");
  const int digits = ctx.digits(8);
  AlphaBetaCache cache(ctx.bounds());
  json doc = ctx.envelope("table1", digits);
  if (ctx.config.format == Format::csv) ctx.out << "b,L,M,U\n";
  if (ctx.config.format == Format::text)
    ctx.out << std::setw(4) << "b" << std::setw(digits + 6) << "L(b)" << std::setw(digits + 6) << "M(b)"
            << std::setw(digits + 6) << "U(b)" << '\n';
  for (std::int64_t b = b_min; b <= b_max; ++b) {
    const TableRow row = table_row(Base(static_cast<std::uint64_t>(b)), cache);
    const std::string l = row.L.nearest_decimal(digits);
    const std::string mm = row.M.nearest_decimal(digits);
    const std::string u = row.U.nearest_decimal(digits);
    switch (ctx.config.format) {
      case Format::text:
        ctx.out << std::setw(4) << b << std::setw(digits + 6) << l << std::setw(digits + 6) << mm
                << std::setw(digits + 6) << u << '\n';
        break;
      case Format::csv: ctx.out << b << ',' << l << ',' << mm << ',' << u << '\n'; break;
      case Format::json: doc["rows"].push_back({{"b", b}, {"L", l}, {"M", mm}, {"U", u}}); break;
    }
  }
  if (ctx.config.format == Format::json) ctx.emit(doc);
  return kExitOk;
}

int cmd_mono(const Context& ctx, std::int64_t b_max) {
  const Base top = make_base("--max", b_max);
  const int digits = ctx.digits(7);
  const ChainReport rep = verify_monotone_chain(top, ctx.bounds());
  switch (ctx.config.format) {
    case Format::text:
      if (rep.verified) {
        ctx.out << "chain verified: s_b < s_b' for 2 ≤ b < b' ≤ " << b_max << '\n';
      } else {
        for (const auto& link : rep.links)
          if (!link.separated)
            ctx.out << "not separated: alpha_" << link.b << " = " << link.alpha_b.upper_decimal(digits)
                    << " >= beta_" << link.b + 1 << " = " << link.beta_next.lower_decimal(digits) << '\n';
        ctx.out << "chain NOT verified up to " << b_max << '\n';
      }
      break;
    case Format::csv:
      ctx.out << "b,alpha_b,beta_b_plus_1,separated\n";
      for (const auto& link : rep.links)
        ctx.out << link.b << ',' << link.alpha_b.upper_decimal(digits) << ','
                << link.beta_next.lower_decimal(digits) << ',' << (link.separated ? "true" : "false") << '\n';
      break;
    case Format::json: {
      json doc = ctx.envelope("mono", digits);
      for (const auto& link : rep.links)
        doc["rows"].push_back({{"b", link.b},
                               {"alpha_b", link.alpha_b.upper_decimal(digits)},
                               {"beta_b_plus_1", link.beta_next.lower_decimal(digits)},
                               {"separated", link.separated}});
      doc["verified"] = rep.verified;
      ctx.emit(doc);
      break;
    }
  }
  return rep.verified ? kExitOk : kExitFailed;
}

int cmd_scan(const Context& ctx, std::int64_t b_min, std::int64_t b_max) {
  check_positive("--min", b_min, 3);
  if (b_max < b_min) throw std::invalid_argument("--max must be >= --min");
  const ScanReport rep = logconcavity_scan(Base(static_cast<std::uint64_t>(b_min)),
                                           Base(static_cast<std::uint64_t>(b_max)), ctx.bounds());
  switch (ctx.config.format) {
    case Format::text: {
      std::size_t l_neg = 0, u_pos = 0;
      for (const auto& e : rep.entries) {
        l_neg += e.L == Sign::negative;
        u_pos += e.U == Sign::positive;
        if (e.M != Sign::positive) ctx.out << "b=" << e.b << " M(b) " << to_string(e.M) << '\n';
      }
      ctx.out << (rep.all_m_positive ? "M(b) > 0" : "M(b) > 0 NOT established") << " for " << b_min
              << " ≤ b ≤ " << b_max << " (L(b) < 0 at " << l_neg << " bases, U(b) > 0 at " << u_pos
              << " of " << rep.entries.size() << ")\n";
      break;
    }
    case Format::csv:
      ctx.out << "b,L,M,U\n";
      for (const auto& e : rep.entries)
        ctx.out << e.b << ',' << to_string(e.L) << ',' << to_string(e.M) << ',' << to_string(e.U) << '\n';
      break;
    case Format::json: {
      json doc = ctx.envelope("scan-logconcave", ctx.digits(8));
      for (const auto& e : rep.entries)
        doc["rows"].push_back({{"b", e.b}, {"L", to_string(e.L)}, {"M", to_string(e.M)}, {"U", to_string(e.U)}});
      doc["all_m_positive"] = rep.all_m_positive;
      ctx.emit(doc);
      break;
    }
  }
  return rep.all_m_positive ? kExitOk : kExitFailed;
}

int cmd_kernels(const Context& ctx, std::int64_t base) {
  const Base b = make_base("--base", base);
  const int digits = ctx.digits(7);
  std::vector<KernelReport> reports;
  if (b.value() >= 4) {
    reports.push_back(kernel_middle_shift_check(b));
    reports.push_back(kernel_carry_check(b));
  }
  if (b.value() >= 6) reports.push_back(kernel_lead_shift_check(b));
  reports.push_back(tail_inequality_check(b, ctx.bounds()));
  std::optional<bool> shift;
  if (b.value() >= 6) shift = three_digit_shift_check(b, ctx.exact());

  bool ok = shift.value_or(true);
  for (const auto& r : reports) ok = ok && r.all_hold && r.algebra_matches;

  auto detail = [&](const KernelReport& r) {
    if (r.value) return r.value->str(digits);
    if (r.counterexample)
      return "a=" + std::to_string(r.counterexample->first) + " c=" + std::to_string(r.counterexample->second);
    return std::string();
  };
  switch (ctx.config.format) {
    case Format::text:
      for (const auto& r : reports)
        ctx.out << std::left << std::setw(16) << to_string(r.kernel) << " b=" << base << " cases=" << r.cases
                << (r.all_hold ? " holds" : " FAILS") << (r.algebra_matches ? "" : " (algebra mismatch)")
                << (detail(r).empty() ? "" : " " + detail(r)) << '\n';
      if (shift)
        ctx.out << std::left << std::setw(16) << "three-digit" << " b=" << base
                << (*shift ? " holds" : " FAILS") << '\n';
      break;
    case Format::csv:
      ctx.out << "kernel,b,cases,holds,algebra_matches,detail\n";
      for (const auto& r : reports)
        ctx.out << to_string(r.kernel) << ',' << base << ',' << r.cases << ',' << (r.all_hold ? "true" : "false")
                << ',' << (r.algebra_matches ? "true" : "false") << ",\"" << detail(r) << "\"\n";
      if (shift) ctx.out << "three-digit," << base << ",1," << (*shift ? "true" : "false") << ",true,\"\"\n";
      break;
    case Format::json: {
      json doc = ctx.envelope("kernels", digits);
      for (const auto& r : reports)
        doc["rows"].push_back({{"kernel", to_string(r.kernel)},
                               {"b", base},
                               {"cases", r.cases},
                               {"holds", r.all_hold},
                               {"algebra_matches", r.algebra_matches},
                               {"detail", detail(r)}});
      if (shift)
        doc["rows"].push_back({{"kernel", "three-digit"}, {"b", base}, {"cases", 1}, {"holds", *shift},
                               {"algebra_matches", true}, {"detail", ""}});
      doc["verified"] = ok;
      ctx.emit(doc);
      break;
    }
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_layer(const Context& ctx, std::int64_t base, std::int64_t k, bool exact) {
  const Base b = make_base("--base", base);
  check_positive("--k", k, 1);
  const int digits = ctx.digits(7);
  const auto kk = static_cast<unsigned>(k);
  const std::string terms = count_palindromes(b, kk).get_str();
  std::string lo, hi, value;
  if (exact) {
    value = layer_sum_exact(b, kk, ctx.exact()).value.str();
  } else {
    const Enclosure e = layer_sum_enclosure(b, kk, ctx.bounds());
    lo = e.lower_decimal(digits);
    hi = e.upper_decimal(digits);
  }
  switch (ctx.config.format) {
    case Format::text:
      ctx.out << (exact ? value : "[" + lo + ", " + hi + "]") << '\n';
      break;
    case Format::csv:
      if (exact)
        ctx.out << "b,k,terms,value\n" << base << ',' << k << ',' << terms << ',' << value << '\n';
      else
        ctx.out << "b,k,terms,lower,upper\n" << base << ',' << k << ',' << terms << ',' << lo << ',' << hi << '\n';
      break;
    case Format::json: {
      json doc = ctx.envelope("layer", digits);
      json row = {{"b", base}, {"k", k}, {"terms", terms}};
      if (exact) {
        row["value"] = value;
      } else {
        row["lower"] = lo;
        row["upper"] = hi;
      }
      doc["rows"].push_back(row);
      ctx.emit(doc);
      break;
    }
  }
  return kExitOk;
}

int cmd_enumerate(const Context& ctx, std::int64_t base, std::int64_t k, std::int64_t limit) {
  const Base b = make_base("--base", base);
  check_positive("--k", k, 1);
  auto stream = enumerate_palindromes(b, static_cast<unsigned>(k));
  std::vector<std::string> values;
  while (auto n = stream.next()) {
    if (limit > 0 && static_cast<std::int64_t>(values.size()) >= limit) break;
    values.push_back(n->get_str());
  }
  switch (ctx.config.format) {
    case Format::text:
      for (std::size_t i = 0; i < values.size(); ++i) ctx.out << (i ? " " : "") << values[i];
      ctx.out << '\n';
      break;
    case Format::csv:
      ctx.out << "index,n\n";
      for (std::size_t i = 0; i < values.size(); ++i) ctx.out << i << ',' << values[i] << '\n';
      break;
    case Format::json: {
      json doc = ctx.envelope("enumerate", ctx.digits(7));
      for (std::size_t i = 0; i < values.size(); ++i) doc["rows"].push_back({{"index", i}, {"n", values[i]}});
      ctx.emit(doc);
      break;
    }
  }
  return kExitOk;
}

int cmd_asymptotic(const Context& ctx, std::int64_t b_min, std::int64_t b_max) {
  const Base lo = make_base("--min", b_min);
  const Base hi = make_base("--max", b_max);
  if (b_max < b_min) throw std::invalid_argument("--max must be >= --min");
  const int digits = ctx.digits(7);
  const AsymptoticReport rep = asymptotic_error_metric(lo, hi, ctx.bounds());
  switch (ctx.config.format) {
    case Format::text: {
      std::ostringstream metric;
      metric << std::setprecision(8) << rep.max_metric;
      ctx.out << "max |mid - estimate| * b / log b = " << metric.str() << " at b=" << rep.argmax << '\n'
              << "midpoint differences positive: " << (rep.differences_positive() ? "yes" : "no") << '\n'
              << "midpoint differences decreasing from b=" << std::max<std::int64_t>(b_min, 10) << ": "
              << (rep.differences_decreasing(static_cast<std::uint64_t>(std::max<std::int64_t>(b_min, 10)))
                      ? "yes"
                      : "no")
              << '\n';
      break;
    }
    case Format::csv:
      ctx.out << "b,scaled_deviation,midpoint_difference\n";
      for (std::size_t i = 0; i < rep.scaled_deviation.size(); ++i) {
        ctx.out << rep.scaled_deviation[i].first << ',' << rep.scaled_deviation[i].second.upper_decimal(digits) << ',';
        if (i < rep.midpoint_differences.size()) ctx.out << rep.midpoint_differences[i].second.nearest_decimal(digits + 4);
        ctx.out << '\n';
      }
      break;
    case Format::json: {
      json doc = ctx.envelope("asymptotic", digits);
      for (std::size_t i = 0; i < rep.scaled_deviation.size(); ++i) {
        json row = {{"b", rep.scaled_deviation[i].first},
                    {"scaled_deviation", rep.scaled_deviation[i].second.upper_decimal(digits)}};
        if (i < rep.midpoint_differences.size())
          row["midpoint_difference"] = rep.midpoint_differences[i].second.nearest_decimal(digits + 4);
        doc["rows"].push_back(row);
      }
      doc["argmax"] = rep.argmax;
      doc["differences_positive"] = rep.differences_positive();
      ctx.emit(doc);
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds and exact partial sums for reciprocal sums of base-b palindromes", "palsum"};
  app.require_subcommand(1);
  app.fallthrough();

  OutputConfig cfg;
  std::string format = "text";
  std::optional<int> digits;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--digits", digits, "Decimal digits to print (default: 7, table1: 8)");
  app.add_option("--precision-bits", cfg.precision_bits, "Working precision in bits")->check(CLI::Range(64u, 1u << 20));
  app.add_option("--term-budget", cfg.term_budget, "Maximum terms for exact sums")
      ->check(CLI::Range(std::uint64_t{1000}, UINT64_MAX));
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  std::int64_t base = 0, k = 0, limit = 0, b_min = 3, b_max = 20;
  int ell = 5, m = 5;
  bool exact = false;

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds for s_b");
  bounds->add_option("--base", base, "Base b >= 2")->required();
  bounds->add_option("--ell", ell, "Layers summed exactly (>= 3)")->capture_default_str();
  bounds->add_option("--m", m, "Geometric tail start (>= 2)")->capture_default_str();

  auto* table1 = app.add_subcommand("table1", "L(b), M(b), U(b) table");
  table1->add_option("--min", b_min, "First base (>= 3)")->capture_default_str();
  auto* t1max = table1->add_option("--max", b_max, "Last base");

  auto* mono = app.add_subcommand("mono", "Verify s_b < s_{b+1} for consecutive bases");
  std::int64_t mono_max = 50;
  mono->add_option("--max", mono_max, "Largest base")->capture_default_str();

  auto* scan = app.add_subcommand("scan-logconcave", "Sign of M(b) over a range");
  std::int64_t scan_min = 3, scan_max = 500;
  scan->add_option("--min", scan_min)->capture_default_str();
  scan->add_option("--max", scan_max)->capture_default_str();

  auto* kernels = app.add_subcommand("kernels", "Three-digit comparison kernels and the tail inequality");
  std::int64_t kernel_base = 0;
  kernels->add_option("--base", kernel_base)->required();

  auto* layer = app.add_subcommand("layer", "Reciprocal sum of the k-digit palindromes");
  std::int64_t layer_base = 0;
  layer->add_option("--base", layer_base)->required();
  layer->add_option("--k", k)->required();
  layer->add_flag("--exact", exact, "Print the reduced fraction");

  auto* enumerate = app.add_subcommand("enumerate", "List the k-digit palindromes");
  std::int64_t enum_base = 0, enum_k = 0;
  enumerate->add_option("--base", enum_base)->required();
  enumerate->add_option("--k", enum_k)->required();
  enumerate->add_option("--limit", limit, "Stop after this many (0 = all)");

  auto* asymptotic = app.add_subcommand("asymptotic", "Deviation from (b+2)/(b+1)(log b + gamma)");
  std::int64_t asym_min = 2, asym_max = 500;
  asymptotic->add_option("--min", asym_min)->capture_default_str();
  asymptotic->add_option("--max", asym_max)->capture_default_str();

  std::vector<std::string> argv_store{"palsum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  cfg.format = format == "csv" ? Format::csv : (format == "json" ? Format::json : Format::text);
  cfg.decimal_digits = digits;
  Context ctx{cfg, out, err};

  try {
    if (cfg.decimal_digits && *cfg.decimal_digits < 1) throw std::invalid_argument("--digits must be >= 1");
    if (*bounds) return cmd_bounds(ctx, base, ell, m);
    if (*table1) return cmd_table1(ctx, b_min, t1max->count() ? b_max : std::max<std::int64_t>(b_min, 20));
    if (*mono) return cmd_mono(ctx, mono_max);
    if (*scan) return cmd_scan(ctx, scan_min, scan_max);
    if (*kernels) return cmd_kernels(ctx, kernel_base);
    if (*layer) return cmd_layer(ctx, layer_base, k, exact);
    if (*enumerate) return cmd_enumerate(ctx, enum_base, enum_k, limit);
    if (*asymptotic) return cmd_asymptotic(ctx, asym_min, asym_max);
  } catch (const TermBudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --term-budget to at least " << e.required().get_str() << ")\n";
    return kExitUsage;
  } catch (const PrecisionUnderflow& e) {
    err << "error: " << e.what() << " (raise --precision-bits or lower --digits)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace palsum::cli
