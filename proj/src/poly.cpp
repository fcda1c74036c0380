#include "hc/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hc {

bool Multipoly::GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

void Multipoly::add_term(const std::vector<int>& exps, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(exps);
    if (it == terms.end()) {
        terms.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

Rat Multipoly::eval(const Profile& x) const {
    if (static_cast<int>(x.size()) < nvars) throw std::invalid_argument("eval: too few values");
    Rat total = 0;
    for (auto& [e, c] : terms) {
        Rat t(c);
        for (int v = 0; v < nvars; ++v)
            for (int k = 0; k < e[v]; ++k) t *= to_rat(x[v]);
        total += t;
    }
    total.canonicalize();
    return total;
}

Multipoly Multipoly::operator-(const Multipoly& other) const {
    Multipoly out(*this);
    for (auto& [e, c] : other.terms) out.add_term(e, -c);
    return out;
}

Multipoly Multipoly::negated_vars() const {
    Multipoly out = Multipoly::zero(nvars);
    for (auto& [e, c] : terms) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        out.add_term(e, deg % 2 == 0 ? c : -c);
    }
    return out;
}

bool Multipoly::operator==(const Multipoly& other) const {
    return nvars == other.nvars && terms == other.terms;
}

int Multipoly::total_degree() const {
    int deg = -1;
    for (auto& [e, c] : terms) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

int Multipoly::min_degree() const {
    int deg = -1;
    for (auto& [e, c] : terms) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (deg < 0 || d < deg) deg = d;
    }
    return deg;
}

bool Multipoly::parity_pure(int parity) const {
    for (auto& [e, c] : terms)
        if (std::accumulate(e.begin(), e.end(), 0) % 2 != parity % 2) return false;
    return true;
}

std::string Multipoly::str(const std::string& stem) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest degree first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (!first) os << (a < 0 ? " - " : " + ");
        if (first && a < 0) os << "-";
        first = false;
        Rat mag = a < 0 ? Rat(-a) : a;
        bool unit = (mag == 1);
        bool any_var = std::accumulate(e.begin(), e.end(), 0) > 0;
        if (!unit || !any_var) os << rat_str(mag);
        bool star = !unit || !any_var;
        for (int v = 0; v < nvars; ++v) {
            if (e[v] == 0) continue;
            if (star) os << "*";
            os << stem << (v + 1);
            if (e[v] > 1) os << "^" << e[v];
            star = true;
        }
    }
    return os.str();
}

bool solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::vector<Rat>& out) {
    const std::size_t rows = a.size();
    if (rows == 0) return false;
    const std::size_t cols = a[0].size();
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[rank]);
        std::swap(b[sel], b[rank]);
        Rat inv = a[rank][col];
        for (std::size_t j = col; j < cols; ++j) a[rank][j] /= inv;
        b[rank] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank < cols) return false;
    for (std::size_t i = rank; i < rows; ++i)
        if (b[i] != 0) return false; // inconsistent overdetermined system
    out.assign(cols, Rat(0));
    for (std::size_t i = 0; i < rank; ++i) out[pivot_col[i]] = b[i];
    for (auto& v : out) v.canonicalize();
    return true;
}

bool solve_exact_multi(std::vector<std::vector<Rat>> a, std::vector<std::vector<Rat>> b,
                       std::vector<std::vector<Rat>>& out) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n) return false;
    const std::size_t w = b[0].size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) return false;
        std::swap(a[sel], a[col]);
        std::swap(b[sel], b[col]);
        Rat inv = a[col][col];
        for (std::size_t j = 0; j < n; ++j) a[col][j] /= inv;
        for (std::size_t j = 0; j < w; ++j) b[col][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[col][j];
            for (std::size_t j = 0; j < w; ++j) b[i][j] -= f * b[col][j];
        }
    }
    out = std::move(b);
    return true;
}

} // namespace hc
