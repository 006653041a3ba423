#ifndef CURVLAB_LP_HPP
#define CURVLAB_LP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvlab/planar_map.hpp"
#include "curvlab/rational.hpp"

namespace curvlab {

class lp_error : public std::runtime_error {
public:
    explicit lp_error(const std::string& what) : std::runtime_error(what) {}
};

// Named discharging shares with their shipped default values; complementary
// pairs sum to one.
struct WeightSet {
    std::map<std::string, Rational> values;
    std::vector<std::pair<std::string, std::string>> pairs;

    Rational get(const std::string& name) const;
    void set(const std::string& name, const Rational& v); // keeps pairs in sync
};

// One additive term of a scenario:
//   count * [share *] excess(fv) [* weight(name)] [@quoted]
// count is how many vertices of this kind enter the estimate, share a fixed
// pairing fraction, weight a named variable share. The optional annotation
// is the tabulated decimal value of one vertex's contribution; it feeds the
// side-by-side evaluation against the tabulated constants.
struct ScenarioTerm {
    Rational coeff;           // count
    Rational share = rat(1);  // fixed extra factor
    FaceVector fv;
    std::string weight; // empty when the term has no variable share
    std::optional<Rational> quoted;
};

// A strict linear inequality sum(terms) > bound. Single-term entries double
// as certification rows for the tabulated per-vertex constants.
struct ScenarioConstraint {
    std::string id;
    std::vector<ScenarioTerm> terms;
    Rational bound;

    bool is_row() const { return terms.size() == 1; }
};

struct ScenarioSet {
    WeightSet weights; // defaults declared in the file
    std::vector<ScenarioConstraint> constraints;
};

ScenarioSet load_scenarios(const std::string& path);
ScenarioSet parse_scenarios(std::istream& in, const std::string& origin);
// weights file: "name value" lines overriding the declared defaults
void load_weights(const std::string& path, WeightSet& into);

struct CaseVerdict {
    std::string id;
    Rational value;                  // exact left-hand side at the weights
    Rational margin;                 // value - bound
    std::optional<Rational> quoted_margin; // via the tabulated constants
    bool pass = false;
};

struct VerifyReport {
    std::vector<CaseVerdict> cases;
    bool feasible = true;
    Rational min_margin;
    std::optional<Rational> min_quoted_margin;
};

// Evaluates every constraint exactly at the given weights.
VerifyReport verify_weights(const ScenarioSet& s, const WeightSet& w);

struct SolveResult {
    bool feasible = false;
    WeightSet weights;   // an optimal vertex
    Rational margin;     // maximal minimum margin over all constraints
    bool certified = false; // dual certificate checked exactly
    std::vector<std::string> infeasible_core; // irreducible violated subset
};

// Exact-rational simplex over the weight box maximizing the minimum margin.
SolveResult solve_scenarios(const ScenarioSet& s);

// Low-level exact simplex: maximize c x subject to A x <= b, x >= 0.
struct SimplexResult {
    enum Status { Optimal, Infeasible, Unbounded } status = Infeasible;
    std::vector<Rational> x;
    Rational value;
    std::vector<Rational> dual; // certificate: y >= 0, yA >= c, yb = value
};

SimplexResult simplex_solve(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b, const std::vector<Rational>& c);

} // namespace curvlab

#endif
