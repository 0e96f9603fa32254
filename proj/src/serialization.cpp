#include "twoexperts/serialization.hpp"

#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace twoexperts {

namespace {

using nlohmann::json;

const char* lagging_name(Lagging lagging) {
  switch (lagging) {
    case Lagging::expert1: return "expert1";
    case Lagging::expert2: return "expert2";
    case Lagging::none: return "tie";
  }
  return "?";
}

void write_le_double(std::ostream& out, double value) {
  static_assert(sizeof(double) == 8);
  unsigned char bytes[8];
  std::memcpy(bytes, &value, 8);
  // The supported targets are little-endian; byte order is asserted by the
  // serialization round-trip test.
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string cost_kind_name(CostKind kind) {
  switch (kind) {
    case CostKind::restricted_binary: return "restricted-binary";
    case CostKind::binary: return "binary";
    case CostKind::general: return "general";
  }
  return "?";
}

void write_transcript_csv(std::ostream& out, const Transcript& tr) {
  out << "t,l1,l2,x1,x2,player_cost,L1,L2,gap,cum_regret\n";
  std::int64_t t = 0;
  for (const TranscriptRound& r : tr.rounds) {
    ++t;
    out << t << ',' << format_double(r.cost.l1) << ',' << format_double(r.cost.l2)
        << ',' << format_double(r.x.x1) << ',' << format_double(r.x.x2) << ','
        << format_double(r.player_cost) << ',' << format_double(r.loss1) << ','
        << format_double(r.loss2) << ',' << format_double(r.gap) << ','
        << format_double(r.cum_regret) << '\n';
  }
}

void write_transcript_json(std::ostream& out, const Transcript& tr,
                           std::int64_t seed) {
  json doc;
  doc["policy"] = tr.policy_label;
  doc["T"] = tr.horizon.rounds;
  doc["kind"] = cost_kind_name(tr.kind);
  if (seed >= 0) doc["seed"] = seed;
  json rounds = json::array();
  std::int64_t t = 0;
  for (const TranscriptRound& r : tr.rounds) {
    ++t;
    rounds.push_back({{"t", t},
                      {"l1", r.cost.l1},
                      {"l2", r.cost.l2},
                      {"x1", r.x.x1},
                      {"x2", r.x.x2},
                      {"player_cost", r.player_cost},
                      {"L1", r.loss1},
                      {"L2", r.loss2},
                      {"gap", r.gap},
                      {"lagging", lagging_name(r.lagging)},
                      {"cum_regret", r.cum_regret}});
  }
  doc["rounds"] = std::move(rounds);
  out << doc.dump(2) << '\n';
}

void write_cost_sequence_csv(std::ostream& out, const CostSequence& seq) {
  out << "t,l1,l2\n";
  std::int64_t t = 0;
  for (const CostVector& c : seq.costs) {
    ++t;
    out << t << ',' << format_double(c.l1) << ',' << format_double(c.l2) << '\n';
  }
}

CostSequence read_cost_sequence_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,l1,l2", 0) != 0) {
    throw std::invalid_argument("cost sequence CSV: missing t,l1,l2 header");
  }
  std::vector<CostVector> costs;
  bool restricted = true;
  bool binary = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::getline(row, field, ',');  // t, ignored
    CostVector c{};
    std::getline(row, field, ',');
    c.l1 = std::stod(field);
    std::getline(row, field, ',');
    c.l2 = std::stod(field);
    if (!(c.l1 >= 0.0 && c.l1 <= 1.0 && c.l2 >= 0.0 && c.l2 <= 1.0)) {
      throw std::invalid_argument("cost sequence CSV: cost outside [0,1]");
    }
    binary = binary && (c.l1 == 0.0 || c.l1 == 1.0) && (c.l2 == 0.0 || c.l2 == 1.0);
    restricted = restricted && ((c.l1 == 1.0 && c.l2 == 0.0) ||
                                (c.l1 == 0.0 && c.l2 == 1.0));
    costs.push_back(c);
  }
  if (costs.empty()) {
    throw std::invalid_argument("cost sequence CSV: no rounds");
  }
  const CostKind kind = restricted ? CostKind::restricted_binary
                        : binary   ? CostKind::binary
                                   : CostKind::general;
  return CostSequence{Horizon(static_cast<std::int64_t>(costs.size())),
                      std::move(costs), kind};
}

void write_cost_sequence_json(std::ostream& out, const CostSequence& seq) {
  json doc;
  doc["T"] = seq.horizon.rounds;
  doc["kind"] = cost_kind_name(seq.kind);
  json costs = json::array();
  for (const CostVector& c : seq.costs) {
    costs.push_back({c.l1, c.l2});
  }
  doc["costs"] = std::move(costs);
  out << doc.dump(2) << '\n';
}

void write_cover_tables_json(std::ostream& out, const CoverTables& tables) {
  const std::int64_t n = tables.horizon().rounds;
  json doc;
  doc["T"] = n;
  json v = json::array();
  for (std::int64_t t = 0; t <= n; ++t) {
    json row = json::array();
    for (std::int64_t g = 0; g <= n; ++g) row.push_back(tables.value(t, g));
    v.push_back(std::move(row));
  }
  doc["V"] = std::move(v);
  json p = json::array();
  for (std::int64_t t = 1; t <= n; ++t) {
    json row = json::array();
    for (std::int64_t g = 0; g <= n - 1; ++g) row.push_back(tables.probability(t, g));
    p.push_back(std::move(row));
  }
  doc["P"] = std::move(p);
  out << doc.dump() << '\n';
}

void write_cover_tables_binary(std::ostream& out, const CoverTables& tables) {
  const std::int64_t n = tables.horizon().rounds;
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  for (std::int64_t t = 0; t <= n; ++t) {
    for (std::int64_t g = 0; g <= n; ++g) write_le_double(out, tables.value(t, g));
  }
  for (std::int64_t t = 0; t <= n; ++t) {
    for (std::int64_t g = 0; g <= n; ++g) {
      const bool valid = t >= 1 && g <= n - 1;
      write_le_double(out, valid ? tables.probability(t, g) : 0.0);
    }
  }
}

}  // namespace twoexperts
