#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "twoexperts/adversaries.hpp"
#include "twoexperts/engine.hpp"
#include "twoexperts/policies.hpp"

namespace twoexperts {

// All numeric CSV fields use 17 significant digits (round-trip exact for
// 64-bit floats), so identical runs produce byte-identical artifacts.
std::string format_double(double value);

// Transcript: CSV header t,l1,l2,x1,x2,player_cost,L1,L2,gap,cum_regret;
// JSON adds metadata (policy label, T, cost kind, optional seed).
void write_transcript_csv(std::ostream& out, const Transcript& tr);
void write_transcript_json(std::ostream& out, const Transcript& tr,
                           std::int64_t seed = -1);

// CostSequence: CSV header t,l1,l2; JSON mirror.
void write_cost_sequence_csv(std::ostream& out, const CostSequence& seq);
CostSequence read_cost_sequence_csv(std::istream& in);
void write_cost_sequence_json(std::ostream& out, const CostSequence& seq);

// CoverTables dumps. Binary layout: int64 T, then V row-major
// (T+1)*(T+1) little-endian 64-bit floats, then P row-major (rows 1..T,
// g 0..T-1, zero-padded to the same (T+1)*(T+1) shape).
void write_cover_tables_json(std::ostream& out, const CoverTables& tables);
void write_cover_tables_binary(std::ostream& out, const CoverTables& tables);

std::string cost_kind_name(CostKind kind);

}  // namespace twoexperts
