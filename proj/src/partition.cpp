#include "dpgens/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace dpgens {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int number() {
        skip_ws();
        std::size_t start = pos;
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000) throw ParseError("number too large", start);
            ++pos;
        }
        if (start == pos) throw ParseError("expected a positive integer", start);
        return static_cast<int>(value);
    }
};

}  // namespace

Partition Partition::parse(std::string_view text) {
    Scanner sc{text};
    bool paren = sc.accept('(');
    std::vector<int> parts;
    if (!(paren ? (sc.skip_ws(), sc.pos < text.size() && text[sc.pos] == ')') : sc.at_end())) {
        do {
            std::size_t where = (sc.skip_ws(), sc.pos);
            int part = sc.number();
            int times = 1;
            if (sc.accept('^')) times = sc.number();
            if (part == 0) throw ParseError("parts must be positive", where);
            if (!parts.empty() && part > parts.back())
                throw ParseError("parts must be weakly decreasing", where);
            parts.insert(parts.end(), times, part);
        } while (sc.accept(','));
    }
    if (paren && !sc.accept(')')) throw ParseError("expected ')'", sc.pos);
    if (!sc.at_end()) throw ParseError("unexpected character", sc.pos);
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::compact_str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(parts_[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> c(lambda.empty() ? 0 : lambda[1], 0);
    for (int part : lambda.parts())
        for (int i = 0; i < part; ++i) ++c[i];
    return Partition(std::move(c));
}

std::vector<int> delta(const Partition& lambda) {
    const int n = lambda.size();
    Partition conj = conjugate(lambda);
    std::vector<int> d(n, 0);
    int acc = 0;
    for (int k = 1; k <= n; ++k) {
        acc += conj[n - k + 1];
        d[k - 1] = acc;
    }
    return d;
}

bool contains(const Partition& nu, const Partition& mu) {
    if (nu.length() > mu.length()) return false;
    for (int i = 1; i <= nu.length(); ++i)
        if (nu[i] > mu[i]) return false;
    return true;
}

void for_each_partition(int b, int max_length, const std::function<void(const Partition&)>& f) {
    if (b < 0) return;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            f(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) >= max_length) return;
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(b, b);
}

std::vector<Partition> partitions_of(int b, int max_length) {
    std::vector<Partition> out;
    for_each_partition(b, max_length, [&](const Partition& p) { out.push_back(p); });
    return out;
}

Filling::Filling(Partition shape, std::vector<std::vector<int>> columns)
    : shape_(std::move(shape)), cols_(std::move(columns)) {
    Partition conj = conjugate(shape_);
    if (static_cast<int>(cols_.size()) != conj.length())
        throw std::invalid_argument("filling does not match its shape");
    for (int c = 0; c < conj.length(); ++c)
        if (static_cast<int>(cols_[c].size()) != conj[c + 1])
            throw std::invalid_argument("filling column height does not match its shape");
}

std::vector<int> Filling::column_top_down(int col) const {
    std::vector<int> out(cols_.at(col).rbegin(), cols_.at(col).rend());
    return out;
}

std::map<Cell, int> Filling::entries() const {
    std::map<Cell, int> out;
    for (int c = 0; c < columns(); ++c)
        for (int r = 0; r < height(c); ++r) out[{r, c}] = cols_[c][r];
    return out;
}

Filling regular_filling(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    const int ncols = conj.length();
    std::vector<std::vector<int>> cols(ncols);
    for (int c = 0; c < ncols; ++c) cols[c].assign(conj[c + 1], 0);
    int next = 1;
    for (int c = 0; c < ncols; ++c)
        for (int r = conj[c + 1] - 1; r >= 1; --r) cols[c][r] = next++;
    for (int c = ncols - 1; c >= 0; --c) cols[c][0] = next++;
    return Filling(lambda, std::move(cols));
}

Filling antidiagonal_filling(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<int> d = delta(lambda);
    // Column c has height δ_{n-c}; cell (r, c) holds n - r - c.
    std::vector<int> heights;
    for (int c = 0; c < n && d[n - c - 1] > 0; ++c) heights.push_back(d[n - c - 1]);
    std::vector<std::vector<int>> cols(heights.size());
    for (std::size_t c = 0; c < heights.size(); ++c)
        for (int r = 0; r < heights[c]; ++r) cols[c].push_back(n - r - static_cast<int>(c));
    return Filling(conjugate(Partition(heights)), std::move(cols));
}

Filling rightmost_deletion(const Filling& af) {
    std::map<int, int> last_col;
    for (int c = 0; c < af.columns(); ++c)
        for (int r = 0; r < af.height(c); ++r) last_col[af.at(r, c)] = c;
    std::vector<std::vector<int>> cols;
    std::vector<int> heights;
    for (int c = 0; c < af.columns(); ++c) {
        std::vector<int> kept;
        for (int r = 0; r < af.height(c); ++r)
            if (last_col[af.at(r, c)] == c) kept.push_back(af.at(r, c));
        if (kept.empty()) break;
        heights.push_back(static_cast<int>(kept.size()));
        cols.push_back(std::move(kept));
    }
    std::vector<int> sorted = heights;
    if (!std::is_sorted(sorted.rbegin(), sorted.rend()))
        throw std::logic_error("deletion did not produce a Young diagram");
    return Filling(conjugate(Partition(heights)), std::move(cols));
}

std::vector<std::pair<int, int>> TopCellData::labeled() const {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= t; ++k) out.emplace_back(k, b[k - 1]);
    if (b_s) out.emplace_back(s, *b_s);
    return out;
}

TopCellData top_cells(const Partition& lambda) {
    TopCellData td;
    if (lambda.empty()) return td;
    const int n = lambda.size();
    Partition conj = conjugate(lambda);
    td.t = std::max(lambda[2] - 1, 0);
    td.s = lambda[1] - 1;
    int acc = 0;
    for (int k = 1; k <= td.t; ++k) {
        acc += conj[k];
        td.b.push_back(acc - k + 1);
    }
    if (td.s > td.t) td.b_s = n - td.s;
    return td;
}

WeymanDiagram::WeymanDiagram(int n, std::vector<std::pair<int, int>> column_ranges)
    : n_(n), ranges_(std::move(column_ranges)) {}

std::vector<std::pair<int, int>> WeymanDiagram::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < columns(); ++i)
        for (int p = top(i); p <= bottom(i); ++p) out.emplace_back(i, p);
    return out;
}

WeymanDiagram weyman_diagram(const Partition& lambda) {
    Filling af = antidiagonal_filling(lambda);
    std::vector<std::pair<int, int>> ranges;
    for (int c = 0; c < af.columns(); ++c) ranges.emplace_back(af.top(c), af.bottom(c));
    return WeymanDiagram(lambda.size(), std::move(ranges));
}

bool passes_segment_test(const WeymanDiagram& w, int i, int p) {
    for (int j = 1; j < w.columns(); ++j) {
        for (int q = std::max(2, w.top(j)); q <= std::min(p, w.bottom(j)); ++q) {
            if (j == i && q == p) continue;
            if (static_cast<long>(j) * (p - 1) >= static_cast<long>(i) * (q - 1)) return false;
        }
    }
    return true;
}

std::vector<std::pair<int, int>> conjectured_cells(const Partition& lambda) {
    std::vector<std::pair<int, int>> out;
    if (lambda.empty()) return out;
    WeymanDiagram w = weyman_diagram(lambda);
    for (auto [i, p] : top_cells(lambda).labeled())
        if (passes_segment_test(w, i, p)) out.emplace_back(i, p);
    return out;
}

std::string render_ascii(const Filling& f) {
    int width = 1;
    int rows = 0;
    for (int c = 0; c < f.columns(); ++c) {
        rows = std::max(rows, f.height(c));
        for (int r = 0; r < f.height(c); ++r)
            width = std::max<int>(width, static_cast<int>(std::to_string(f.at(r, c)).size()));
    }
    std::ostringstream os;
    for (int r = rows - 1; r >= 0; --r) {
        std::string line;
        for (int c = 0; c < f.columns() && r < f.height(c); ++c) {
            std::string cell = std::to_string(f.at(r, c));
            if (c) line += ' ';
            line += std::string(width - cell.size(), ' ') + cell;
        }
        os << line << '\n';
    }
    return os.str();
}

std::string render_ascii(const WeymanDiagram& w, const std::vector<std::pair<int, int>>& marked) {
    std::set<std::pair<int, int>> mk(marked.begin(), marked.end());
    const int pw = static_cast<int>(std::to_string(w.n()).size());
    std::ostringstream os;
    os << std::string(pw, ' ') << " |";
    for (int i = 0; i < w.columns(); ++i) os << ' ' << (i % 10) << ' ';
    os << '\n';
    for (int p = 1; p <= w.n(); ++p) {
        std::string label = std::to_string(p);
        std::string line = std::string(pw - label.size(), ' ') + label + " |";
        for (int i = 0; i < w.columns(); ++i) {
            if (!w.has(i, p)) line += " . ";
            else if (mk.count({i, p})) line += "[X]";
            else line += " X ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

}  // namespace dpgens
