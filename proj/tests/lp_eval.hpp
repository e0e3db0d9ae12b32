#pragma once

// Text-driven evaluator for the exported LP models.  It re-parses the file
// format from scratch and minimises the 0/1 program by branch-and-propagate,
// sharing no code with the exporter, so agreement with the exact solver
// checks the whole export chain.

#include <cctype>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lp_eval {

struct Term {
    long long coef = 0;
    int var = -1;
};

// rel: -1 for <=, 0 for =, +1 for >=
struct Row {
    std::string name;
    std::vector<Term> terms;
    int rel = 0;
    long long rhs = 0;
};

struct Problem {
    std::vector<std::string> var_names;
    std::unordered_map<std::string, int> var_ids;
    std::vector<Term> objective;
    std::vector<Row> rows;
    std::vector<char> is_binary;
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline bool is_number(const std::string& tok) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

}  // namespace detail

inline Problem parse(const std::string& text) {
    Problem p;
    auto var_id = [&](const std::string& name) {
        auto it = p.var_ids.find(name);
        if (it != p.var_ids.end()) return it->second;
        const int id = static_cast<int>(p.var_names.size());
        p.var_names.push_back(name);
        p.var_ids.emplace(name, id);
        p.is_binary.push_back(0);
        return id;
    };
    // toks[from, to) is a run of [sign] [coef] var groups.
    auto parse_terms = [&](const std::vector<std::string>& toks, size_t from, size_t to) {
        std::vector<Term> terms;
        long long sign = 1;
        long long coef = 1;
        bool have_coef = false;
        for (size_t i = from; i < to; ++i) {
            const std::string& t = toks[i];
            if (t == "+") {
                sign = 1;
            } else if (t == "-") {
                sign = -1;
            } else if (detail::is_number(t)) {
                coef = std::stoll(t);
                have_coef = true;
            } else {
                terms.push_back({sign * (have_coef ? coef : 1), var_id(t)});
                sign = 1;
                coef = 1;
                have_coef = false;
            }
        }
        if (have_coef) throw std::runtime_error("lp parse: dangling coefficient");
        return terms;
    };

    enum class Section { None, Objective, Rows, Binary };
    Section section = Section::None;
    std::istringstream in(text);
    std::string line;
    bool ended = false;
    while (std::getline(in, line)) {
        const auto toks = detail::tokens(line);
        if (toks.empty()) continue;
        if (toks.size() == 1 && toks[0] == "Minimize") {
            section = Section::Objective;
            continue;
        }
        if (toks.size() == 2 && toks[0] == "Subject" && toks[1] == "To") {
            section = Section::Rows;
            continue;
        }
        if (toks.size() == 1 && toks[0] == "Binary") {
            section = Section::Binary;
            continue;
        }
        if (toks.size() == 1 && toks[0] == "End") {
            ended = true;
            break;
        }
        switch (section) {
            case Section::Objective: {
                size_t from = 0;
                if (!toks[0].empty() && toks[0].back() == ':') from = 1;
                p.objective = parse_terms(toks, from, toks.size());
                break;
            }
            case Section::Rows: {
                if (toks.size() < 3 || toks[0].empty() || toks[0].back() != ':')
                    throw std::runtime_error("lp parse: malformed row: " + line);
                Row row;
                row.name = toks[0].substr(0, toks[0].size() - 1);
                const std::string& rel = toks[toks.size() - 2];
                if (rel == "<=")
                    row.rel = -1;
                else if (rel == "=")
                    row.rel = 0;
                else if (rel == ">=")
                    row.rel = 1;
                else
                    throw std::runtime_error("lp parse: missing relation: " + line);
                row.rhs = std::stoll(toks.back());
                row.terms = parse_terms(toks, 1, toks.size() - 2);
                p.rows.push_back(std::move(row));
                break;
            }
            case Section::Binary:
                for (const auto& tok : toks) p.is_binary[var_id(tok)] = 1;
                break;
            case Section::None:
                throw std::runtime_error("lp parse: content before Minimize: " + line);
        }
    }
    if (!ended) throw std::runtime_error("lp parse: missing End");
    for (size_t v = 0; v < p.is_binary.size(); ++v)
        if (!p.is_binary[v])
            throw std::runtime_error("lp parse: variable not declared binary: " + p.var_names[v]);
    return p;
}

struct MinResult {
    bool feasible = false;
    long long objective = 0;
};

// Minimises the objective over binary assignments satisfying every row.
// Branches on the all-ones "= 1" rows (each picks exactly one variable) and
// closes everything else by unit propagation; any variable still free at a
// leaf stays 0, which is objective-minimal because 1-fixings only ever happen
// when forced.
inline MinResult solve_min(const Problem& p) {
    const int nv = static_cast<int>(p.var_names.size());
    const int nr = static_cast<int>(p.rows.size());
    for (const auto& t : p.objective)
        if (t.coef < 0)
            throw std::runtime_error("lp eval: negative objective coefficient unsupported");

    struct RowState {
        long long fixed = 0;     // contribution of decided variables
        long long min_free = 0;  // lowest possible contribution of free ones
        long long max_free = 0;
    };
    std::vector<RowState> rs(nr);
    std::vector<std::vector<std::pair<int, long long>>> var_rows(nv);
    for (int r = 0; r < nr; ++r)
        for (const auto& t : p.rows[r].terms) {
            var_rows[t.var].push_back({r, t.coef});
            (t.coef < 0 ? rs[r].min_free : rs[r].max_free) += t.coef;
        }

    std::vector<std::vector<int>> groups;
    std::vector<char> in_group(nv, 0);
    for (int r = 0; r < nr; ++r) {
        const Row& row = p.rows[r];
        if (row.rel != 0 || row.rhs != 1) continue;
        bool all_ones = !row.terms.empty();
        for (const auto& t : row.terms) all_ones = all_ones && t.coef == 1;
        if (!all_ones) continue;
        std::vector<int> vars;
        for (const auto& t : row.terms) {
            if (in_group[t.var]) throw std::runtime_error("lp eval: overlapping choice rows");
            in_group[t.var] = 1;
            vars.push_back(t.var);
        }
        groups.push_back(std::move(vars));
    }

    std::vector<int> value(nv, -1);
    long long work = 0;
    auto fix = [&](int v, int val) {
        if (++work > 50'000'000) throw std::runtime_error("lp eval: work budget exceeded");
        value[v] = val;
        for (const auto& [r, c] : var_rows[v]) {
            (c < 0 ? rs[r].min_free : rs[r].max_free) -= c;
            rs[r].fixed += c * val;
        }
    };
    auto unfix = [&](int v) {
        const int val = value[v];
        for (const auto& [r, c] : var_rows[v]) {
            rs[r].fixed -= c * val;
            (c < 0 ? rs[r].min_free : rs[r].max_free) += c;
        }
        value[v] = -1;
    };

    // Applies every forced fixing; false on contradiction.  trail records
    // fixings for rollback.
    auto propagate = [&](std::vector<int>& trail) -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int r = 0; r < nr && !changed; ++r) {
                const Row& row = p.rows[r];
                const long long lo = rs[r].fixed + rs[r].min_free;
                const long long hi = rs[r].fixed + rs[r].max_free;
                if (row.rel <= 0 && lo > row.rhs) return false;
                if (row.rel >= 0 && hi < row.rhs) return false;
                for (const auto& t : row.terms) {
                    if (value[t.var] != -1) continue;
                    int forced = -1;
                    if (row.rel <= 0) {  // <= side
                        if (t.coef < 0 && lo - t.coef > row.rhs) forced = 1;
                        if (t.coef > 0 && lo + t.coef > row.rhs) forced = 0;
                    }
                    if (forced == -1 && row.rel >= 0) {  // >= side
                        if (t.coef > 0 && hi - t.coef < row.rhs) forced = 1;
                        if (t.coef < 0 && hi + t.coef < row.rhs) forced = 0;
                    }
                    if (forced != -1) {
                        fix(t.var, forced);
                        trail.push_back(t.var);
                        changed = true;
                        break;
                    }
                }
            }
        }
        return true;
    };

    MinResult best;
    auto leaf_objective = [&]() {
        for (int r = 0; r < nr; ++r) {
            long long lhs = rs[r].fixed;  // free variables count as 0
            const Row& row = p.rows[r];
            if (row.rel <= 0 && lhs > row.rhs) return;
            if (row.rel >= 0 && lhs < row.rhs) return;
        }
        long long obj = 0;
        for (const auto& t : p.objective)
            if (value[t.var] == 1) obj += t.coef;
        if (!best.feasible || obj < best.objective) best = {true, obj};
    };

    std::function<void(size_t)> dfs = [&](size_t gi) {
        if (gi == groups.size()) {
            leaf_objective();
            return;
        }
        for (int pick : groups[gi]) {
            if (value[pick] == 0) continue;
            std::vector<int> trail;
            bool ok = true;
            for (int v : groups[gi]) {
                if (value[v] != -1) continue;
                fix(v, v == pick ? 1 : 0);
                trail.push_back(v);
            }
            ok = propagate(trail);
            if (ok) dfs(gi + 1);
            for (auto it = trail.rbegin(); it != trail.rend(); ++it) unfix(*it);
        }
    };

    std::vector<int> root_trail;
    if (propagate(root_trail)) dfs(0);
    return best;
}

inline MinResult solve_min(const std::string& lp_text) { return solve_min(parse(lp_text)); }

}  // namespace lp_eval
