#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "calamity/calamity.hpp"
#include "calamity/json.hpp"

namespace calamity::cli {
namespace {

struct Options {
  std::string format = "text";

  std::string date;
  std::string method = "calamity";
  std::string direction = "forward";
  bool trace = false;

  int system_k = 0;
  bool leap = false;

  std::vector<std::string> tokens;

  int first_year = 1583;
  int last_year = 2599;
  std::size_t max_counterexamples = 10;
};

bool json_mode(const Options& o) { return o.format == "json"; }

MonthDirection parse_direction(const std::string& s) {
  if (s == "forward") return MonthDirection::forward;
  if (s == "backward") return MonthDirection::backward;
  return MonthDirection::automatic;
}

std::string two_digit(int v) {
  std::ostringstream os;
  os << std::setw(2) << std::setfill('0') << v;
  return os.str();
}

void print_trace(std::ostream& out, const Date& date, const StepTrace& t) {
  out << "  century anchor   " << t.century_anchor << "\n";
  out << "  year             " << two_digit(date.year_of_century()) << " is " << t.year.distance << " "
      << (t.year.direction == Direction::forward ? "after" : "before") << " anchor year "
      << two_digit(t.year.anchor) << " -> " << to_string(t.year.direction) << " digit " << t.year.digit << "\n";
  out << "  month code       " << t.month_code.str() << " (" << month_abbrev(date.month())
      << (date.leap() && date.month() <= 2 ? ", leap" : "") << ")\n";
  out << "  target           " << to_string(t.target.direction) << " gap " << t.target.gap << " + "
      << (t.target.direction == Direction::forward ? "tens" : "units") << " digit " << t.target.digit << " -> "
      << (t.target.direction == Direction::forward ? "+" : "-") << t.target.offset << "\n";
  out << "  weekday          (" << t.century_anchor << " + " << t.year.digit
      << (t.target.direction == Direction::forward ? " + " : " - ") << t.target.offset << ") mod 7 = "
      << t.final.index() << "\n";
}

int cmd_weekday(const Options& o, std::ostream& out) {
  const Date date = parse_iso(o.date);
  WeekdayResult result{to_iso(date), o.method, {}, std::nullopt};
  if (o.method == "oracle") {
    result.weekday = oracle_weekday(date);
  } else if (o.method == "standard") {
    result.weekday = weekday_standard(date);
  } else {
    const StepTrace t = weekday_calamity_traced(date, parse_direction(o.direction));
    result.weekday = t.final;
    if (o.trace) result.trace = t;
  }

  if (json_mode(o)) {
    out << render_json(to_json_doc(result));
  } else {
    out << result.weekday.name() << " (" << result.weekday.index() << ")\n";
    if (result.trace) print_trace(out, date, *result.trace);
  }
  return kOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const TablesResult t = make_tables(o.system_k, o.leap);
  if (json_mode(o)) {
    out << render_json(to_json_doc(t));
    return kOk;
  }
  out << "Vectorized doomsdays, system k = " << t.k << (t.leap ? " (leap year)" : " (common year)") << "\n";
  out << "Month   ";
  for (int m = 1; m <= 12; ++m) out << std::setw(4) << month_abbrev(m);
  out << "\nd mod 7 ";
  for (int r : t.doomsday_residues) out << std::setw(4) << r;
  out << "\nV       ";
  for (const auto& c : t.codes) out << std::setw(4) << c;
  out << "\n\nDoomyears\n";
  out << "d   ";
  for (const Doomyear& d : t.doomyears) out << std::setw(5) << d.distance;
  out << "\nF   ";
  for (const Doomyear& d : t.doomyears) out << std::setw(5) << two_digit(d.forward_packed());
  out << "\nB   ";
  for (const Doomyear& d : t.doomyears) out << std::setw(5) << two_digit(d.backward_packed());
  out << "\nD   ";
  for (const Doomyear& d : t.doomyears) out << std::setw(5) << two_digit(d.packed());
  out << "\n\nCentury anchors (repeat every 400 years)\n";
  for (const auto& [century, anchor] : t.century_anchors) {
    out << "  " << century << "s/" << century + 400 << "s  " << anchor << "\n";
  }
  return kOk;
}

MonthDay parse_month_day(const std::string& token) {
  const auto slash = token.find('/');
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 2 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw DomainError("malformed anchor date '" + token + "', expected M/D");
    }
    return std::stoi(s);
  };
  if (slash == std::string::npos) throw DomainError("malformed anchor date '" + token + "', expected M/D");
  return {number(token.substr(0, slash)), number(token.substr(slash + 1))};
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<MonthDay> dates;
  for (const auto& tok : o.tokens) dates.push_back(parse_month_day(tok));

  ClassifyResult result;
  int code = kOk;
  try {
    const int k = classify(dates);
    result.k = k;
    const AnchorSystem s = system(k);
    for (int m = 1; m <= 12; ++m) result.codes.push_back(s.code(m).str());
  } catch (const NotUniformError& e) {
    result.offending_months = e.offending_months();
    code = kCheckFailed;
    if (!json_mode(o)) err << "error: " << e.what() << "\n";
  }

  if (json_mode(o)) {
    out << render_json(to_json_doc(result));
  } else if (result.k) {
    out << "k = " << *result.k << "\n";
    for (int m = 1; m <= 12; ++m) out << std::setw(4) << month_abbrev(m);
    out << "\n";
    for (const auto& c : result.codes) out << std::setw(4) << c;
    out << "\n";
  } else {
    out << "not uniform; inconsistent months:";
    for (int m : result.offending_months) out << " " << month_abbrev(m);
    out << "\n";
  }
  return code;
}

void require_range(const Options& o) {
  require_year(o.first_year);
  require_year(o.last_year);
  if (o.last_year < o.first_year) {
    throw DomainError("reversed year range " + std::to_string(o.first_year) + " .. " + std::to_string(o.last_year));
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_range(o);
  const VerifyResult r = run_verification(o.first_year, o.last_year, o.max_counterexamples);
  if (json_mode(o)) {
    out << render_json(to_json_doc(r));
  } else {
    out << "years " << r.first_year << ".." << r.last_year << ": " << r.dates_tested << " dates tested, "
        << r.checks_run << " checks run, " << r.failures << " failures\n";
    for (const auto& c : r.counterexamples) out << "  " << c << "\n";
  }
  return r.failures == 0 ? kOk : kCheckFailed;
}

void print_metrics(std::ostream& out, const ComparisonReport& r) {
  const MethodStats& s = r.standard;
  const MethodStats& c = r.calamity;
  auto row = [&](const std::string& label, const auto& a, const auto& b) {
    out << std::left << std::setw(44) << label << std::right << std::setw(12) << a << std::setw(12) << b << "\n";
  };
  auto count = [](const MethodStats& m, OpKind k) {
    auto it = m.counts_per_date.find(k);
    return it == m.counts_per_date.end() ? 0 : it->second;
  };
  out << "Operations per date, " << to_iso(r.first) << " .. " << to_iso(r.last) << " (" << s.dates << " dates)\n";
  row("Operation", "Standard", "Calamity");
  out << "Year-offset step\n";
  row("  Integer division (yy / 4)", count(s, OpKind::int_division), count(c, OpKind::int_division));
  row("  Multi-digit addition", count(s, OpKind::multidigit_add), count(c, OpKind::multidigit_add));
  row("  Modular reduction (mod 7, large)", count(s, OpKind::mod_reduce_large), count(c, OpKind::mod_reduce_large));
  row("  Small subtraction (distance to anchor)", count(s, OpKind::small_subtract), count(c, OpKind::small_subtract));
  row("  Table recall", count(s, OpKind::table_recall), count(c, OpKind::table_recall));
  out << "Month-day step\n";
  row("  Subtraction (target - doomsday)", count(s, OpKind::doomsday_subtract), count(c, OpKind::doomsday_subtract));
  row("  Sign correction / mod 7", count(s, OpKind::sign_correct), count(c, OpKind::sign_correct));
  row("  Gap measurement (to month anchor)", count(s, OpKind::gap_measure), count(c, OpKind::gap_measure));
  row("  Digit selection + single-digit add", count(s, OpKind::digit_select_add), count(c, OpKind::digit_select_add));
  row("Total operations", s.total_per_date, c.total_per_date);
  row("Operation dependency", s.serial() ? "serial" : "independent", c.serial() ? "serial" : "independent");
  row("Longest dependency chain", s.serial_depth, c.serial_depth);
  row("Max intermediate value (measured)", s.max_intermediate, c.max_intermediate);
  row("Divisions required", s.divisions_per_date, c.divisions_per_date);
  row("Mod reductions on large numbers", s.large_mod_reductions_per_date, c.large_mod_reductions_per_date);
  out << "\nMeasured maximum result by operation\n";
  for (OpKind k : kAllOpKinds) {
    if (count(s, k) == 0 && count(c, k) == 0) continue;
    row("  " + std::string(to_string(k)), count(s, k) ? std::to_string(s.max_by_kind.at(k)) : "-",
        count(c, k) ? std::to_string(c.max_by_kind.at(k)) : "-");
  }
  if (!s.uniform || !c.uniform) out << "warning: operation counts varied between dates\n";
  if (s.weekday_mismatches || c.weekday_mismatches) out << "warning: traced weekday disagreed with the method\n";
}

int cmd_metrics(const Options& o, std::ostream& out) {
  require_range(o);
  const ComparisonReport r = compare_years(o.first_year, o.last_year);
  if (json_mode(o)) {
    out << render_json(to_json_doc(r));
  } else {
    print_metrics(out, r);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Doomsday weekday computation with Conway's arithmetic and the Calamity Tables", "calamity"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* weekday = app.add_subcommand("weekday", "Weekday of an ISO date (YYYY-MM-DD)");
  weekday->add_option("date", o.date, "Date, YYYY-MM-DD")->required();
  weekday->add_option("--method", o.method)->check(CLI::IsMember({"standard", "calamity", "oracle"}))->capture_default_str();
  weekday->add_option("--direction", o.direction, "Month step direction (calamity only)")
      ->check(CLI::IsMember({"forward", "backward", "auto"}))
      ->capture_default_str();
  weekday->add_flag("--trace", o.trace, "Print the calamity step trace");

  auto* tables = app.add_subcommand("tables", "Month codes, Doomyears and century anchors for system k");
  tables->add_option("--system", o.system_k, "Equivalence class k")->check(CLI::Range(0, 6))->capture_default_str();
  tables->add_flag("--leap", o.leap, "Leap-year January/February codes");

  auto* classify_cmd = app.add_subcommand("classify", "Equivalence class of 12 anchor dates given as M/D");
  classify_cmd->add_option("dates", o.tokens, "Twelve M/D tokens, one per month")->required()->expected(12);

  auto* verify = app.add_subcommand("verify", "Differential verification over a year range");
  verify->add_option("--from", o.first_year)->capture_default_str();
  verify->add_option("--to", o.last_year)->capture_default_str();
  verify->add_option("--max-counterexamples", o.max_counterexamples)->capture_default_str();

  auto* metrics = app.add_subcommand("metrics", "Operation counts of both methods over a year range");
  metrics->add_option("--from", o.first_year)->capture_default_str();
  metrics->add_option("--to", o.last_year)->capture_default_str();

  for (auto* sub : {weekday, tables, classify_cmd, verify, metrics}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (o.trace && o.method != "calamity") throw DomainError("--trace requires --method calamity");
    if (*weekday) return cmd_weekday(o, out);
    if (*tables) return cmd_tables(o, out);
    if (*classify_cmd) return cmd_classify(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*metrics) return cmd_metrics(o, out);
  } catch (const std::logic_error& e) {
    // RangeError and DomainError
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace calamity::cli
