#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "prank/cartier.hpp"
#include "prank/gjacobian.hpp"
#include "prank/zeta.hpp"

namespace prank {

inline constexpr const char* kToolVersion = "0.1.0";

struct TermSpec {
    std::vector<long> exps;
    std::string coeff;  // coefficient grammar, or a sweep placeholder
};

struct EquationSpec {
    Bideg degree{0, 0};
    std::vector<TermSpec> terms;
};

/// Declarative curve input, mirroring the TOML file.
struct CurveSpec {
    std::uint64_t p = 0;
    unsigned k = 1;
    std::optional<std::vector<std::uint64_t>> modulus;
    std::string ambient_type;  // "projective" | "hirzebruch"
    int n = 0;                 // projective dimension or Hirzebruch r
    std::optional<std::vector<Bideg>> beta_vectors;
    std::vector<EquationSpec> equations;
    std::vector<SingularityDecl> singularities;
    std::map<std::string, std::string> labels;
};

CurveSpec curvespec_from_json(const nlohmann::json& j);
nlohmann::json curvespec_to_json(const CurveSpec& spec);
CurveSpec curvespec_load(const std::string& path);

/// Placeholder coefficient names ([A-Z][A-Za-z0-9_]*) that are not valid
/// field-element strings, in sorted order.
std::vector<std::string> collect_placeholders(const CurveSpec& spec);

/// Fully instantiated curve: field context, ambient, polynomials.
struct CurveInstance {
    FieldCtxPtr ctx;
    Ambient ambient;
    std::vector<MultiPoly> equations;
    std::vector<SingularityDecl> singularities;

    CurveGeometry geometry() const;
};

CurveInstance instantiate(const CurveSpec& spec,
                          const std::map<std::string, Fq>* bindings = nullptr);

struct PipelineResult {
    std::string route;  // "plane" | "ci" | "hirzebruch"
    long p_a = 0;
    long g = 0;
    long sigma = 0;
    long a_number = 0;     // exact when a_is_exact
    bool a_is_exact = true;
    bool ordinary = false;
    FrobeniusAction action;
    std::optional<CorrectionReport> correction;
    std::vector<std::string> discrepancies;
};

PipelineResult compute_invariants(const CurveInstance& curve);

/// `prank invariants`: the full report as JSON.
nlohmann::json run_invariants(const CurveSpec& spec, bool emit_matrices,
                              const std::string& file_hash);

/// `prank verify`: duality and (when applicable) zeta cross-checks.
/// pass=false maps to exit code 1 in the CLI.
nlohmann::json run_verify(const CurveSpec& spec, int zeta_max_ext,
                          const std::string& file_hash);

/// `prank zeta`: counts and reconstructed numerator.
nlohmann::json run_zeta(const CurveSpec& spec, int max_ext);

struct SweepRange {
    std::string name;
    std::vector<std::string> values;  // coefficient strings
};

struct SweepPredicate {
    std::string lhs, rhs;  // placeholder names or coefficient strings
    bool equal = false;    // true for ==, false for !=
};

SweepPredicate parse_predicate(const std::string& text);
SweepRange parse_range(const std::string& text, const FieldCtx* ctx);

/// Cartesian-product sweep; rows in deterministic parameter order.
/// Returns the CSV body including the header line.
std::string run_sweep(const CurveSpec& spec, std::vector<SweepRange> ranges,
                      const std::vector<SweepPredicate>& predicates);

std::string fnv1a_hex(const std::string& data);

/// PRANK_THREADS override, defaulting to hardware concurrency.
unsigned worker_count();

}  // namespace prank
