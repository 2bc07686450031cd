// Record generation and serialization behind the command-line tool: JSON and
// CSV emitters for classification, witnesses, certificates, oracle sweeps and
// curve sampling. All floats are written with 17 significant digits so output
// round-trips exactly; given the same RunConfig the output is byte-identical.
#pragma once

#include <cstdint>
#include <string>

#include "adg/core.hpp"
#include "adg/witness.hpp"

namespace adg {

enum class OutFormat { Json, Csv };

struct RunConfig {
  double residual_tol = kResidualTol;
  double root_tol = kRootTol;
  std::uint64_t seed = kDefaultSeed;
  OutFormat format = OutFormat::Json;
  int max_exp = kMaxExponentDefault;
};

std::string fmt_double(double v);  // %.17g

/// One classification record: girth, case, normalized form, canonical form,
/// transform chain. JSON object or CSV (header + row) per config.
std::string classify_record(const MonomialPair& p, const RunConfig& cfg);

/// Full sweep over [1,max_exp]^4 in lexicographic order.
/// Columns: s,t,u,v,girth,case,canonical.
std::string table_csv(int max_exp);

/// Witness JSON: cycle type, root values used, chain, all vertex
/// coordinates, residuals, and an independent verification block.
std::string witness_record(const MonomialPair& p, const RunConfig& cfg);

/// Certificate JSON for a girth-eight pair: no-6-cycle sampling report,
/// 4-cycle obstruction, witness verification, aggregate pass flag.
std::string certify8_record(const MonomialPair& p, int trials, const RunConfig& cfg);

/// CSV sweep comparing BFS girth with the Delta brute force over F_q.
/// Columns: q,s,t,u,v,bfs_girth,delta2,delta3,agree (delta3 blank for q > 9).
std::string oracle_csv(int q, int max_exp, bool* all_agree = nullptr);

/// Sampled curve of the case root function. Columns: x,D,sign_change.
std::string curve_csv(int prop, int j, int k, int m, int n,
                      double lo, double hi, int steps);

/// Parse a witness JSON record (as produced by witness_record).
CycleWitness witness_from_json(const std::string& text);

/// Re-verification report for a parsed witness.
std::string verify_record(const CycleWitness& w, const RunConfig& cfg,
                          bool* pass_out = nullptr);

}  // namespace adg
