#include "bpcc/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bpcc/bounds.hpp"
#include "bpcc/rng.hpp"

namespace bpcc {

namespace {

[[noreturn]] void fail(long long lineno, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

bool is_comment(const std::string& s) {
    const size_t pos = s.find_first_not_of(" \t\r");
    return pos != std::string::npos && s[pos] == '#';
}

// Reads the next line that carries data. Returns false at end of input.
// Blank lines are skipped only when allowed; otherwise they are the
// caller's problem and are returned as-is.
bool next_line(std::istream& in, std::string& out, long long& lineno, bool skip_blank) {
    while (std::getline(in, out)) {
        ++lineno;
        if (is_comment(out)) continue;
        if (skip_blank && is_blank(out)) continue;
        return true;
    }
    return false;
}

std::vector<long long> parse_fields(const std::string& line, long long lineno) {
    std::istringstream ss(line);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            fail(lineno, "expected an integer, got '" + tok + "'");
        }
    }
    return out;
}

std::vector<long long> expect_fields(std::istream& in, long long& lineno, size_t count,
                                     const std::string& what) {
    std::string line;
    if (!next_line(in, line, lineno, true)) {
        fail(lineno, "unexpected end of input, expected " + what);
    }
    std::vector<long long> fields = parse_fields(line, lineno);
    if (fields.size() != count) {
        fail(lineno, "expected " + what + " (" + std::to_string(count) + " fields), got " +
                         std::to_string(fields.size()));
    }
    return fields;
}

void expect_end(std::istream& in, long long& lineno) {
    std::string line;
    if (next_line(in, line, lineno, true)) {
        fail(lineno, "unexpected trailing content");
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("no such file: " + path);
    return in;
}

template <typename Fn>
auto with_file(const std::string& path, Fn fn) -> decltype(fn(std::declval<std::ifstream&>())) {
    std::ifstream in = open_or_throw(path);
    try {
        return fn(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

CompatibilityMatrix parse_matrix_rows(std::istream& in, long long& lineno, int p) {
    std::vector<uint8_t> cells;
    cells.reserve(static_cast<size_t>(p) * static_cast<size_t>(p));
    for (int r = 0; r < p; ++r) {
        std::vector<long long> row =
            expect_fields(in, lineno, static_cast<size_t>(p), "a matrix row");
        for (long long v : row) {
            if (v != 0 && v != 1) fail(lineno, "matrix entries must be 0 or 1");
            cells.push_back(static_cast<uint8_t>(v));
        }
    }
    CompatibilityMatrix m(p, std::move(cells));
    if (CheckResult ok = validate_matrix(m); !ok) fail(lineno, ok.message);
    return m;
}

}  // namespace

const char* to_string(DerivationSpec::Scheme s) {
    switch (s) {
        case DerivationSpec::Scheme::UniformRandom:
            return "random";
        case DerivationSpec::Scheme::RoundRobin:
            return "round-robin";
    }
    return "?";
}

DerivationSpec::Scheme parse_scheme(const std::string& text) {
    if (text == "random") return DerivationSpec::Scheme::UniformRandom;
    if (text == "round-robin") return DerivationSpec::Scheme::RoundRobin;
    throw std::invalid_argument("unknown scheme '" + text + "', expected random or round-robin");
}

InstanceKind sniff_instance(const std::string& path) {
    return with_file(path, [&](std::istream& in) {
        long long lineno = 0;
        std::string line;
        if (!next_line(in, line, lineno, true)) {
            fail(lineno, "empty instance file");
        }
        const size_t fields = parse_fields(line, lineno).size();
        if (fields == 3) return InstanceKind::Bpcc;
        if (fields == 1) return InstanceKind::Bpp;
        fail(lineno, "unrecognised header, expected 'n p b' or an item count");
    });
}

Instance parse_instance(std::istream& in) {
    long long lineno = 0;
    std::vector<long long> head = expect_fields(in, lineno, 3, "'n p b'");
    const long long n = head[0], p = head[1], b = head[2];
    if (n < 1) fail(lineno, "item count must be positive");
    if (p < 1) fail(lineno, "category count must be positive");
    if (b < 1) fail(lineno, "capacity must be positive");

    Instance inst;
    inst.n = static_cast<int>(n);
    inst.p = static_cast<int>(p);
    inst.capacity = b;
    inst.compat = parse_matrix_rows(in, lineno, inst.p);

    inst.weights.reserve(static_cast<size_t>(n));
    inst.categories.reserve(static_cast<size_t>(n));
    for (long long j = 0; j < n; ++j) {
        std::vector<long long> item = expect_fields(in, lineno, 2, "'weight category'");
        if (item[0] < 1) fail(lineno, "weight must be positive");
        if (item[1] < 1 || item[1] > p) {
            fail(lineno, "category " + std::to_string(item[1]) + " out of range 1.." +
                             std::to_string(p));
        }
        inst.weights.push_back(item[0]);
        inst.categories.push_back(static_cast<int>(item[1] - 1));
    }
    expect_end(in, lineno);

    if (CheckResult ok = validate_instance(inst); !ok) {
        throw std::runtime_error("invalid instance: " + ok.message);
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    return with_file(path, [](std::istream& in) { return parse_instance(in); });
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << inst.n << ' ' << inst.p << ' ' << inst.capacity << '\n';
    for (int k = 0; k < inst.p; ++k) {
        for (int l = 0; l < inst.p; ++l) {
            out << (l ? " " : "") << static_cast<int>(inst.compat.compatible(k, l));
        }
        out << '\n';
    }
    for (int j = 0; j < inst.n; ++j) {
        out << inst.weights[static_cast<size_t>(j)] << ' '
            << inst.categories[static_cast<size_t>(j)] + 1 << '\n';
    }
}

void save_instance(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_instance(out, inst);
}

BppInstance parse_bpp(std::istream& in) {
    long long lineno = 0;
    const long long n = expect_fields(in, lineno, 1, "an item count")[0];
    if (n < 1) fail(lineno, "item count must be positive");
    const long long b = expect_fields(in, lineno, 1, "a capacity")[0];
    if (b < 1) fail(lineno, "capacity must be positive");

    BppInstance bpp;
    bpp.n = static_cast<int>(n);
    bpp.capacity = b;
    bpp.weights.reserve(static_cast<size_t>(n));
    for (long long j = 0; j < n; ++j) {
        const long long w = expect_fields(in, lineno, 1, "a weight")[0];
        if (w < 1) fail(lineno, "weight must be positive");
        bpp.weights.push_back(w);
    }
    expect_end(in, lineno);
    return bpp;
}

BppInstance load_bpp(const std::string& path) {
    return with_file(path, [](std::istream& in) { return parse_bpp(in); });
}

CompatibilityMatrix parse_matrix(std::istream& in) {
    long long lineno = 0;
    const long long p = expect_fields(in, lineno, 1, "a category count")[0];
    if (p < 1) fail(lineno, "category count must be positive");
    CompatibilityMatrix m = parse_matrix_rows(in, lineno, static_cast<int>(p));
    expect_end(in, lineno);
    return m;
}

CompatibilityMatrix load_matrix(const std::string& path) {
    return with_file(path, [](std::istream& in) { return parse_matrix(in); });
}

Instance derive_bpcc(const BppInstance& src, const DerivationSpec& spec) {
    if (spec.p < 1) throw std::invalid_argument("category count must be positive");
    if (!(spec.capacity_factor > 0.0)) {
        throw std::invalid_argument("capacity factor must be positive");
    }
    CompatibilityMatrix matrix = spec.matrix;
    if (matrix.p != spec.p) {
        if (spec.p > matrix.p) {
            throw std::invalid_argument("category count " + std::to_string(spec.p) +
                                        " exceeds matrix size " + std::to_string(matrix.p));
        }
        matrix = matrix.principal(spec.p);
    }

    // Multiply before dividing and nudge past representation error so that
    // e.g. 120% of 100 lands on 120 exactly.
    const double scaled = static_cast<double>(src.capacity) * spec.capacity_factor / 100.0;
    const long long capacity = static_cast<long long>(std::floor(scaled + 1e-9));
    const long long heaviest = *std::max_element(src.weights.begin(), src.weights.end());
    if (capacity < heaviest) {
        throw std::runtime_error("derived capacity " + std::to_string(capacity) +
                                 " is below the heaviest item " + std::to_string(heaviest));
    }

    Instance inst;
    inst.n = src.n;
    inst.p = spec.p;
    inst.capacity = capacity;
    inst.weights = src.weights;
    inst.compat = std::move(matrix);
    inst.categories.resize(static_cast<size_t>(src.n));
    if (spec.scheme == DerivationSpec::Scheme::UniformRandom) {
        Rng rng(spec.seed);
        for (int& c : inst.categories) c = rng.below_int(spec.p);
    } else {
        for (int j = 0; j < src.n; ++j) inst.categories[static_cast<size_t>(j)] = j % spec.p;
    }

    if (CheckResult ok = validate_instance(inst); !ok) {
        throw std::runtime_error("derived instance is invalid: " + ok.message);
    }
    return inst;
}

void write_solution(std::ostream& out, const Solution& sol) {
    for (int i = 0; i < sol.num_bins(); ++i) {
        std::vector<int> items = sol.items(i);
        std::sort(items.begin(), items.end());
        for (size_t t = 0; t < items.size(); ++t) {
            out << (t ? " " : "") << items[t] + 1;
        }
        out << '\n';
    }
}

void save_solution(const std::string& path, const Solution& sol) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_solution(out, sol);
}

Solution parse_solution(std::istream& in, const Instance& inst) {
    Solution sol(inst);
    long long lineno = 0;
    std::string line;
    int bin = 0;
    while (next_line(in, line, lineno, false)) {
        if (is_blank(line)) fail(lineno, "empty bin");
        for (long long idx : parse_fields(line, lineno)) {
            if (idx < 1 || idx > inst.n) {
                fail(lineno, "item index " + std::to_string(idx) + " out of range 1.." +
                                 std::to_string(inst.n));
            }
            const int item = static_cast<int>(idx - 1);
            if (sol.bin_of(item) != -1) {
                fail(lineno, "item " + std::to_string(idx) + " assigned twice");
            }
            sol.assign(inst, item, bin);
        }
        ++bin;
    }
    return sol;
}

Solution load_solution(const std::string& path, const Instance& inst) {
    return with_file(path, [&](std::istream& in) { return parse_solution(in, inst); });
}

std::string export_lp(const Instance& inst, long long bin_limit) {
    const long long lower = l_cont(inst).value;
    if (bin_limit < lower) {
        throw std::invalid_argument("bin limit " + std::to_string(bin_limit) +
                                    " is below the lower bound " + std::to_string(lower));
    }
    const long long m = bin_limit;
    const int n = inst.n;
    const int p = inst.p;

    std::ostringstream out;
    out << "Minimize\n obj:";
    for (long long i = 1; i <= m; ++i) {
        out << (i == 1 ? " " : " + ") << 'y' << i;
    }
    out << "\nSubject To\n";
    for (long long i = 1; i <= m; ++i) {
        out << " cap" << i << ":";
        for (int j = 1; j <= n; ++j) {
            out << (j == 1 ? " " : " + ") << inst.weights[static_cast<size_t>(j - 1)] << " x" << i
                << '_' << j;
        }
        out << " - " << inst.capacity << " y" << i << " <= 0\n";
    }
    for (int j = 1; j <= n; ++j) {
        out << " asg" << j << ":";
        for (long long i = 1; i <= m; ++i) {
            out << (i == 1 ? " " : " + ") << 'x' << i << '_' << j;
        }
        out << " = 1\n";
    }
    for (long long i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            out << " lnk" << i << '_' << j << ": x" << i << '_' << j << " - f" << i << '_'
                << inst.categories[static_cast<size_t>(j - 1)] + 1 << " <= 0\n";
        }
    }
    for (long long i = 1; i <= m; ++i) {
        for (int k = 0; k < p; ++k) {
            for (int l = k + 1; l < p; ++l) {
                if (inst.compat.compatible(k, l)) continue;
                out << " inc" << i << '_' << k + 1 << '_' << l + 1 << ": f" << i << '_' << k + 1
                    << " + f" << i << '_' << l + 1 << " <= 1\n";
            }
        }
    }
    for (long long i = 1; i + 1 <= m; ++i) {
        out << " sym" << i << ": y" << i << " - y" << i + 1 << " >= 0\n";
    }
    out << "Binary\n";
    for (long long i = 1; i <= m; ++i) out << " y" << i << '\n';
    for (long long i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) out << " x" << i << '_' << j << '\n';
    }
    for (long long i = 1; i <= m; ++i) {
        for (int k = 1; k <= p; ++k) out << " f" << i << '_' << k << '\n';
    }
    out << "End\n";
    return out.str();
}

}  // namespace bpcc
