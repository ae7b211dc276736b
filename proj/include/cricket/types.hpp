#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cricket/date.hpp"
#include "cricket/util.hpp"

namespace cricket {

// Team code, e.g. AUS, IND. Unique within a dataset.
struct TeamId {
  std::string code;

  TeamId() = default;
  explicit TeamId(std::string c) : code(std::move(c)) {}
  auto operator<=>(const TeamId&) const = default;
};

enum class Outcome { A_WINS, B_WINS, DRAW };
enum class MarginType { RUNS, WICKETS, INNINGS, NONE };
enum class ClosedBy { ALL_OUT, DECLARED, TARGET_REACHED, MATCH_END, NOT_BATTED };

// Highest recorded team innings total; caps every innings-score model.
inline constexpr int kMaxInningsRuns = 952;

std::string to_string(Outcome o);
std::string to_string(MarginType m);
std::string to_string(ClosedBy c);
Outcome outcome_from_string(std::string_view s);
MarginType margin_type_from_string(std::string_view s);
ClosedBy closed_by_from_string(std::string_view s);

// One Test match. Margin fields are populated according to margin_type;
// mov_override, when present, carries a precomputed margin-of-victory value
// and takes precedence over margin-based computation.
struct MatchRecord {
  Date date;
  TeamId team_a;
  TeamId team_b;
  TeamId host;
  TeamId toss_winner;
  Outcome outcome = Outcome::DRAW;
  MarginType margin_type = MarginType::NONE;
  int margin_runs = 0;            // RUNS only
  int margin_wickets = 0;         // WICKETS only, 1..10
  int innings_excess_runs = 0;    // INNINGS only
  int total_runs = 0;             // total runs scored in the match
  std::optional<double> winner_fourth_innings_expected;  // precomputed E4R_i
  std::optional<double> mov_override;

  TeamId winner() const {
    return outcome == Outcome::A_WINS ? team_a : team_b;
  }
  TeamId loser() const {
    return outcome == Outcome::A_WINS ? team_b : team_a;
  }
};

struct InningsRecord {
  Date match_date;
  TeamId batting_team;
  int innings_index = 0;  // 1..4
  int runs = 0;
  int wickets_lost = 0;   // 0..10
  ClosedBy closed_by = ClosedBy::ALL_OUT;
};

struct Dataset {
  std::vector<MatchRecord> matches;  // ascending (date, team_a, team_b)
  std::vector<InningsRecord> innings;
  std::set<TeamId> teams;
};

// Rating plus its standard-deviation-like uncertainty.
struct RatingState {
  double rating = 0;
  double rd = 0;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::A_WINS: return "A_WINS";
    case Outcome::B_WINS: return "B_WINS";
    case Outcome::DRAW: return "DRAW";
  }
  throw error("bad outcome enum");
}

inline std::string to_string(MarginType m) {
  switch (m) {
    case MarginType::RUNS: return "RUNS";
    case MarginType::WICKETS: return "WICKETS";
    case MarginType::INNINGS: return "INNINGS";
    case MarginType::NONE: return "NONE";
  }
  throw error("bad margin type enum");
}

inline std::string to_string(ClosedBy c) {
  switch (c) {
    case ClosedBy::ALL_OUT: return "ALL_OUT";
    case ClosedBy::DECLARED: return "DECLARED";
    case ClosedBy::TARGET_REACHED: return "TARGET_REACHED";
    case ClosedBy::MATCH_END: return "MATCH_END";
    case ClosedBy::NOT_BATTED: return "NOT_BATTED";
  }
  throw error("bad closed_by enum");
}

inline Outcome outcome_from_string(std::string_view s) {
  if (s == "A_WINS") return Outcome::A_WINS;
  if (s == "B_WINS") return Outcome::B_WINS;
  if (s == "DRAW") return Outcome::DRAW;
  throw error("unknown outcome: '" + std::string(s) + "'");
}

inline MarginType margin_type_from_string(std::string_view s) {
  if (s == "RUNS") return MarginType::RUNS;
  if (s == "WICKETS") return MarginType::WICKETS;
  if (s == "INNINGS") return MarginType::INNINGS;
  if (s == "NONE") return MarginType::NONE;
  throw error("unknown margin_type: '" + std::string(s) + "'");
}

inline ClosedBy closed_by_from_string(std::string_view s) {
  if (s == "ALL_OUT") return ClosedBy::ALL_OUT;
  if (s == "DECLARED") return ClosedBy::DECLARED;
  if (s == "TARGET_REACHED") return ClosedBy::TARGET_REACHED;
  if (s == "MATCH_END") return ClosedBy::MATCH_END;
  if (s == "NOT_BATTED") return ClosedBy::NOT_BATTED;
  throw error("unknown closed_by: '" + std::string(s) + "'");
}

}  // namespace cricket
