#include "pclass/permutation.hpp"

#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace pclass {

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n) + 1) {
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_cycles(int n, const std::string& cycles) {
    Permutation p(n);
    std::vector<int> cur;
    auto close_cycle = [&]() {
        for (std::size_t i = 0; i < cur.size(); ++i) {
            int from = cur[i];
            int to = cur[(i + 1) % cur.size()];
            if (p.img_[static_cast<std::size_t>(from)] != from)
                throw std::invalid_argument(
                    "Permutation::from_cycles: vertex repeated");
            p.img_[static_cast<std::size_t>(from)] = to;
        }
        cur.clear();
    };
    std::size_t i = 0;
    while (i < cycles.size()) {
        char c = cycles[i];
        if (c == '(') {
            ++i;
        } else if (c == ')') {
            if (!cur.empty()) close_cycle();
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < cycles.size() &&
                   std::isdigit(static_cast<unsigned char>(cycles[j])))
                ++j;
            int v = std::stoi(cycles.substr(i, j - i));
            if (v < 1 || v > n)
                throw std::invalid_argument(
                    "Permutation::from_cycles: vertex out of range");
            cur.push_back(v);
            i = j;
        } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
        } else {
            throw std::invalid_argument(
                "Permutation::from_cycles: unexpected character");
        }
    }
    if (!cur.empty())
        throw std::invalid_argument("Permutation::from_cycles: unclosed cycle");
    return p;
}

Permutation Permutation::inverse() const {
    Permutation r(n());
    for (int v = 1; v <= n(); ++v)
        r.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(v)])] = v;
    return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("Permutation: mismatched ground sets");
    Permutation r(a.n());
    for (int v = 1; v <= a.n(); ++v)
        r.img_[static_cast<std::size_t>(v)] = a.apply(b.apply(v));
    return r;
}

Permutation Permutation::pow(int k) const {
    Permutation base = k >= 0 ? *this : inverse();
    int e = k >= 0 ? k : -k;
    Permutation r = identity(n());
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Simplex Permutation::apply(const Simplex& s) const {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(apply(v));
    return Simplex(std::move(out));
}

bool Permutation::is_identity() const {
    for (int v = 1; v <= n(); ++v)
        if (apply(v) != v) return false;
    return true;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    std::vector<char> seen(img_.size(), 0);
    bool any = false;
    for (int v = 1; v <= n(); ++v) {
        if (seen[static_cast<std::size_t>(v)] || apply(v) == v) continue;
        os << '(';
        int w = v;
        bool first = true;
        while (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            if (!first) os << ' ';
            os << w;
            first = false;
            w = apply(w);
        }
        os << ')';
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

std::vector<Permutation> group_closure(const std::vector<Permutation>& gens) {
    if (gens.empty()) return {};
    std::set<Permutation> seen{Permutation::identity(gens.front().n())};
    std::queue<Permutation> q;
    q.push(*seen.begin());
    while (!q.empty()) {
        Permutation g = q.front();
        q.pop();
        for (const Permutation& h : gens) {
            Permutation gh = h * g;
            if (seen.insert(gh).second) q.push(gh);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Simplex> orbit(const std::vector<Permutation>& group,
                           const Simplex& seed) {
    std::set<Simplex> seen{seed};
    std::queue<Simplex> q;
    q.push(seed);
    while (!q.empty()) {
        Simplex s = q.front();
        q.pop();
        for (const Permutation& g : group) {
            Simplex t = g.apply(s);
            if (seen.insert(t).second) q.push(t);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace pclass
