#include "curvlab/lp.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "curvlab/admissible.hpp"
#include "curvlab/curvature.hpp"

namespace curvlab {

Rational WeightSet::get(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw lp_error("unknown weight '" + name + "'");
    return it->second;
}

void WeightSet::set(const std::string& name, const Rational& v) {
    if (!values.count(name)) throw lp_error("unknown weight '" + name + "'");
    values[name] = v;
    for (auto& [a, b] : pairs) {
        if (a == name) values[b] = rat(1) - v;
        if (b == name) values[a] = rat(1) - v;
    }
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

ScenarioTerm parse_term(const std::string& raw, const std::string& where) {
    ScenarioTerm term;
    std::string s = trim(raw);
    // optional tabulated-value annotation
    auto at = s.find('@');
    if (at != std::string::npos) {
        term.quoted = Rational::parse(s.substr(at + 1));
        s = trim(s.substr(0, at));
    }
    // count * [share *] excess(a,b,..) [* weight(name)]
    std::vector<std::string> factors;
    size_t pos = 0;
    while (pos <= s.size()) {
        auto star = s.find('*', pos);
        factors.push_back(trim(star == std::string::npos ? s.substr(pos)
                                                         : s.substr(pos, star - pos)));
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    if (factors.size() < 2) throw lp_error(where + ": term lacks excess factor: " + raw);
    bool count_seen = false, excess_seen = false;
    for (const auto& f : factors) {
        if (f.rfind("excess(", 0) == 0) {
            if (excess_seen || f.back() != ')') throw lp_error(where + ": bad excess factor: " + raw);
            std::string inner = f.substr(7, f.size() - 8);
            std::istringstream is(inner);
            std::string tok;
            while (std::getline(is, tok, ',')) term.fv.push_back(std::stoi(trim(tok)));
            std::sort(term.fv.begin(), term.fv.end());
            excess_seen = true;
        } else if (f.rfind("weight(", 0) == 0) {
            if (!term.weight.empty() || f.back() != ')')
                throw lp_error(where + ": bad weight factor: " + raw);
            term.weight = trim(f.substr(7, f.size() - 8));
        } else if (!count_seen) {
            term.coeff = Rational::parse(f);
            count_seen = true;
        } else {
            term.share *= Rational::parse(f);
        }
    }
    if (!count_seen || !excess_seen) throw lp_error(where + ": malformed term: " + raw);
    return term;
}

} // namespace

ScenarioSet parse_scenarios(std::istream& in, const std::string& origin) {
    ScenarioSet set;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        std::string where = origin + ":" + std::to_string(lineno);
        if (s.rfind("weight ", 0) == 0) {
            std::istringstream is(s.substr(7));
            std::string name, value, kw, partner;
            if (!(is >> name >> value)) throw lp_error(where + ": bad weight line");
            set.weights.values[name] = Rational::parse(value);
            if (is >> kw) {
                if (kw != "pair" || !(is >> partner)) throw lp_error(where + ": bad pair clause");
                set.weights.pairs.emplace_back(name, partner);
                if (!set.weights.values.count(partner))
                    set.weights.values[partner] = rat(1) - set.weights.values[name];
            }
            continue;
        }
        if (s.rfind("case ", 0) == 0) {
            auto colon = s.find(':');
            if (colon == std::string::npos) throw lp_error(where + ": missing ':'");
            ScenarioConstraint c;
            c.id = trim(s.substr(5, colon - 5));
            std::string rest = s.substr(colon + 1);
            auto gt = rest.rfind('>');
            if (gt == std::string::npos) throw lp_error(where + ": missing '>' bound");
            c.bound = Rational::parse(trim(rest.substr(gt + 1)));
            std::string lhs = rest.substr(0, gt);
            size_t pos = 0;
            while (pos < lhs.size()) {
                auto plus = lhs.find('+', pos);
                std::string piece = plus == std::string::npos ? lhs.substr(pos)
                                                              : lhs.substr(pos, plus - pos);
                if (!trim(piece).empty()) c.terms.push_back(parse_term(piece, where));
                if (plus == std::string::npos) break;
                pos = plus + 1;
            }
            if (c.terms.empty()) throw lp_error(where + ": empty case");
            for (const auto& t : c.terms) {
                if (!t.weight.empty() && !set.weights.values.count(t.weight))
                    throw lp_error(where + ": unknown weight '" + t.weight + "'");
                if (!is_admissible(t.fv))
                    throw lp_error(where + ": face vector in term is not admissible");
            }
            set.constraints.push_back(std::move(c));
            continue;
        }
        throw lp_error(where + ": unrecognized line: " + s);
    }
    return set;
}

ScenarioSet load_scenarios(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lp_error("cannot open scenario file '" + path + "'");
    return parse_scenarios(in, path);
}

void load_weights(const std::string& path, WeightSet& into) {
    std::ifstream in(path);
    if (!in) throw lp_error("cannot open weights file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream is(s);
        std::string name, value;
        if (!(is >> name >> value)) throw lp_error("bad weights line: " + line);
        into.set(name, Rational::parse(value));
    }
}

VerifyReport verify_weights(const ScenarioSet& s, const WeightSet& w) {
    VerifyReport rep;
    bool first = true, first_quoted = true;
    for (const auto& c : s.constraints) {
        CaseVerdict v;
        v.id = c.id;
        bool all_quoted = true;
        Rational quoted_sum;
        for (const auto& t : c.terms) {
            Rational factor = t.share * excess_of(t.fv);
            if (!t.weight.empty()) factor *= w.get(t.weight);
            v.value += t.coeff * factor;
            if (t.quoted)
                quoted_sum += t.coeff * (*t.quoted);
            else
                all_quoted = false;
        }
        v.margin = v.value - c.bound;
        v.pass = v.margin.sign() > 0;
        if (all_quoted && c.terms.size() > 1) v.quoted_margin = quoted_sum - c.bound;
        if (!v.pass) rep.feasible = false;
        if (first || v.margin < rep.min_margin) {
            rep.min_margin = v.margin;
            first = false;
        }
        if (v.quoted_margin &&
            (first_quoted || *v.quoted_margin < *rep.min_quoted_margin)) {
            rep.min_quoted_margin = v.quoted_margin;
            first_quoted = false;
        }
        rep.cases.push_back(std::move(v));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// dense exact simplex, Bland's rule

namespace {

struct Tableau {
    int m = 0, width = 0;
    std::vector<std::vector<Rational>> T;
    std::vector<Rational> rhs;
    std::vector<int> basis;

    void pivot(int row, int col) {
        Rational p = T[row][col];
        for (auto& x : T[row]) x /= p;
        rhs[row] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            Rational f = T[i][col];
            if (f.is_zero()) continue;
            for (int j = 0; j < width; ++j) T[i][j] -= f * T[row][j];
            rhs[i] -= f * rhs[row];
        }
        basis[row] = col;
    }

    // maximize obj; allowed(j) filters entering columns
    template <typename Allowed>
    bool optimize(const std::vector<Rational>& obj, Allowed allowed) {
        while (true) {
            // reduced cost r_j = obj_j - sum_i obj_basis(i) T[i][j]
            int enter = -1;
            for (int j = 0; j < width && enter < 0; ++j) {
                if (!allowed(j)) continue;
                Rational r = obj[j];
                for (int i = 0; i < m; ++i) {
                    const Rational& ob = obj[basis[i]];
                    if (!ob.is_zero() && !T[i][j].is_zero()) r -= ob * T[i][j];
                }
                if (r.sign() > 0) enter = j;
            }
            if (enter < 0) return true; // optimal
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (T[i][enter].sign() <= 0) continue;
                Rational ratio = rhs[i] / T[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false; // unbounded
            pivot(leave, enter);
        }
    }

    Rational objective(const std::vector<Rational>& obj) const {
        Rational v;
        for (int i = 0; i < m; ++i)
            if (!obj[basis[i]].is_zero()) v += obj[basis[i]] * rhs[i];
        return v;
    }
};

} // namespace

SimplexResult simplex_solve(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    SimplexResult out;

    Tableau t;
    t.m = m;
    std::vector<char> negated(m, 0);
    int artificial_count = 0;
    for (int i = 0; i < m; ++i)
        if (b[i].sign() < 0) ++artificial_count;
    t.width = n + m + artificial_count;
    t.T.assign(m, std::vector<Rational>(t.width));
    t.rhs = b;
    t.basis.assign(m, -1);
    int next_art = n + m;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.T[i][j] = A[i][j];
        t.T[i][n + i] = rat(1);
        if (b[i].sign() < 0) {
            negated[i] = 1;
            for (int j = 0; j < t.width; ++j) t.T[i][j] = -t.T[i][j];
            t.rhs[i] = -t.rhs[i];
            t.T[i][next_art] = rat(1);
            t.basis[i] = next_art++;
        } else {
            t.basis[i] = n + i;
        }
    }

    auto is_artificial = [&](int j) { return j >= n + m; };
    if (artificial_count > 0) {
        std::vector<Rational> phase1(t.width);
        for (int j = n + m; j < t.width; ++j) phase1[j] = rat(-1);
        t.optimize(phase1, [](int) { return true; });
        if (t.objective(phase1).sign() < 0) {
            out.status = SimplexResult::Infeasible;
            return out;
        }
        // drive leftover artificials out of the basis where possible
        for (int i = 0; i < m; ++i) {
            if (!is_artificial(t.basis[i])) continue;
            for (int j = 0; j < n + m; ++j)
                if (!t.T[i][j].is_zero()) {
                    t.pivot(i, j);
                    break;
                }
        }
    }

    std::vector<Rational> obj(t.width);
    for (int j = 0; j < n; ++j) obj[j] = c[j];
    bool bounded = t.optimize(obj, [&](int j) { return !is_artificial(j); });
    if (!bounded) {
        out.status = SimplexResult::Unbounded;
        return out;
    }
    out.status = SimplexResult::Optimal;
    out.x.assign(n, Rational());
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) out.x[t.basis[i]] = t.rhs[i];
    out.value = t.objective(obj);

    // dual from the slack columns, flipped back on negated rows
    out.dual.assign(m, Rational());
    for (int i = 0; i < m; ++i) {
        Rational y;
        for (int r = 0; r < t.m; ++r) {
            const Rational& ob = obj[t.basis[r]];
            if (!ob.is_zero() && !t.T[r][n + i].is_zero()) y += ob * t.T[r][n + i];
        }
        out.dual[i] = negated[i] ? -y : y;
    }
    return out;
}

namespace {

// exact check of primal and dual optimality
bool certify(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
             const std::vector<Rational>& c, const SimplexResult& r) {
    const int m = static_cast<int>(A.size()), n = static_cast<int>(c.size());
    for (int j = 0; j < n; ++j)
        if (r.x[j].sign() < 0) return false;
    for (int i = 0; i < m; ++i) {
        Rational ax;
        for (int j = 0; j < n; ++j) ax += A[i][j] * r.x[j];
        if (ax > b[i]) return false;
        if (r.dual[i].sign() < 0) return false;
    }
    Rational yb;
    for (int i = 0; i < m; ++i) yb += r.dual[i] * b[i];
    if (yb != r.value) return false;
    for (int j = 0; j < n; ++j) {
        Rational ya;
        for (int i = 0; i < m; ++i) ya += r.dual[i] * A[i][j];
        if (ya < c[j]) return false;
    }
    return true;
}

struct BuiltLp {
    std::vector<std::string> names; // weight variables
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rational> c;
    int tpos = 0, tneg = 0;
    std::vector<int> constraint_rows; // row index per scenario constraint
};

BuiltLp build_lp(const ScenarioSet& s, const std::vector<const ScenarioConstraint*>& active) {
    BuiltLp lp;
    for (const auto& [name, _] : s.weights.values) lp.names.push_back(name);
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(lp.names.size()); ++i) idx[lp.names[i]] = i;
    const int nw = static_cast<int>(lp.names.size());
    lp.tpos = nw;
    lp.tneg = nw + 1;
    const int n = nw + 2;

    auto add_row = [&](std::vector<Rational> row, Rational rhs) {
        lp.A.push_back(std::move(row));
        lp.b.push_back(std::move(rhs));
        return static_cast<int>(lp.A.size()) - 1;
    };

    for (int j = 0; j < nw; ++j) {
        std::vector<Rational> row(n);
        row[j] = rat(1);
        add_row(row, rat(1)); // w_j <= 1
    }
    for (const auto& [a, bb] : s.weights.pairs) {
        std::vector<Rational> row(n), row2(n);
        row[idx[a]] = rat(1);
        row[idx[bb]] = rat(1);
        row2[idx[a]] = rat(-1);
        row2[idx[bb]] = rat(-1);
        add_row(row, rat(1));
        add_row(row2, rat(-1));
    }
    for (const auto* cp : active) {
        // sum coeff*excess*w + const - t >= bound  ->  -sum .. + t <= const - bound
        std::vector<Rational> row(n);
        Rational constant;
        for (const auto& term : cp->terms) {
            Rational factor = term.coeff * term.share * excess_of(term.fv);
            if (term.weight.empty())
                constant += factor;
            else
                row[idx[term.weight]] -= factor;
        }
        row[lp.tpos] = rat(1);
        row[lp.tneg] = rat(-1);
        lp.constraint_rows.push_back(add_row(row, constant - cp->bound));
    }
    lp.c.assign(n, Rational());
    lp.c[lp.tpos] = rat(1);
    lp.c[lp.tneg] = rat(-1);
    return lp;
}

Rational max_min_margin(const ScenarioSet& s, const std::vector<const ScenarioConstraint*>& active,
                        bool* ok, std::vector<Rational>* weights_out,
                        std::vector<std::string>* names_out, bool* certified) {
    BuiltLp lp = build_lp(s, active);
    auto r = simplex_solve(lp.A, lp.b, lp.c);
    if (r.status != SimplexResult::Optimal) {
        // cannot happen: the box makes the problem feasible and bounded
        *ok = false;
        return Rational();
    }
    *ok = true;
    if (certified) *certified = certify(lp.A, lp.b, lp.c, r);
    if (weights_out) {
        weights_out->assign(lp.names.size(), Rational());
        for (size_t i = 0; i < lp.names.size(); ++i) (*weights_out)[i] = r.x[i];
    }
    if (names_out) *names_out = lp.names;
    return r.value;
}

} // namespace

SolveResult solve_scenarios(const ScenarioSet& s) {
    SolveResult out;
    out.weights = s.weights;
    if (s.constraints.empty()) {
        out.feasible = true;
        out.certified = true;
        out.margin = Rational();
        return out;
    }
    std::vector<const ScenarioConstraint*> all;
    for (const auto& c : s.constraints) all.push_back(&c);
    bool ok = false, certified = false;
    std::vector<Rational> ws;
    std::vector<std::string> names;
    Rational margin = max_min_margin(s, all, &ok, &ws, &names, &certified);
    if (!ok) throw lp_error("unexpected simplex failure");
    out.margin = margin;
    out.certified = certified;
    out.feasible = margin.sign() > 0;
    for (size_t i = 0; i < names.size(); ++i) out.weights.values[names[i]] = ws[i];
    if (!out.feasible) {
        // greedily shrink to an irreducible infeasible subset
        std::vector<const ScenarioConstraint*> core = all;
        for (size_t i = 0; i < core.size();) {
            std::vector<const ScenarioConstraint*> trial;
            for (size_t j = 0; j < core.size(); ++j)
                if (j != i) trial.push_back(core[j]);
            bool tok = false;
            Rational tm = trial.empty() ? rat(1) : max_min_margin(s, trial, &tok, nullptr, nullptr, nullptr);
            if (!trial.empty() && tok && tm.sign() <= 0)
                core = std::move(trial); // still infeasible without it
            else
                ++i;
        }
        for (const auto* c : core) out.infeasible_core.push_back(c->id);
    }
    return out;
}

} // namespace curvlab
