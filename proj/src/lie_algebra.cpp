#include "gf2coh/lie_algebra.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace gf2coh {

LieAlgebra::LieAlgebra(std::string name, int n, std::map<std::pair<int, int>, std::vector<int>> brackets)
    : name_(std::move(name)), n_(n), brackets_(std::move(brackets)), sources_(static_cast<std::size_t>(n) + 1) {
    for (auto& [pair, targets] : brackets_) {
        std::sort(targets.begin(), targets.end());
        for (int k : targets) {
            sources_[static_cast<std::size_t>(k)].push_back(pair);
            if (k != pair.first + pair.second) graded_ = false;
        }
    }
}

LieAlgebra LieAlgebra::m0(int n) {
    if (n < 3) throw std::invalid_argument("m0(n): need n >= 3");
    std::map<std::pair<int, int>, std::vector<int>> br;
    for (int i = 2; i <= n - 1; ++i) br[{1, i}] = {i + 1};
    return LieAlgebra("m0(" + std::to_string(n) + ")", n, std::move(br));
}

LieAlgebra LieAlgebra::m2(int n) {
    if (n < 5) throw std::invalid_argument("m2(n): need n >= 5");
    std::map<std::pair<int, int>, std::vector<int>> br;
    for (int i = 2; i <= n - 1; ++i) br[{1, i}] = {i + 1};
    for (int j = 3; j <= n - 2; ++j) br[{2, j}] = {j + 2};
    return LieAlgebra("m2(" + std::to_string(n) + ")", n, std::move(br));
}

LieAlgebra LieAlgebra::from_brackets(std::string name, int n,
                                     const std::map<std::pair<int, int>, std::vector<int>>& brackets) {
    if (n < 1) throw std::invalid_argument("from_brackets: need n >= 1");
    std::map<std::pair<int, int>, std::vector<int>> br;
    for (const auto& [pair, targets] : brackets) {
        auto [i, j] = pair;
        if (i < 1 || j < 1 || i > n || j > n)
            throw std::invalid_argument("from_brackets: bracket index out of range");
        if (i >= j) throw std::invalid_argument("from_brackets: brackets must be keyed by i < j");
        std::vector<int> ts = targets;
        std::sort(ts.begin(), ts.end());
        if (std::adjacent_find(ts.begin(), ts.end()) != ts.end())
            throw std::invalid_argument("from_brackets: duplicate target index");
        for (int k : ts)
            if (k < 1 || k > n) throw std::invalid_argument("from_brackets: target index out of range");
        if (!ts.empty()) br[pair] = std::move(ts);
    }
    return LieAlgebra(std::move(name), n, std::move(br));
}

std::vector<int> LieAlgebra::bracket(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("bracket: index out of range");
    if (i == j) return {};
    if (i > j) std::swap(i, j);   // characteristic 2: no sign on the swap
    auto it = brackets_.find({i, j});
    return it == brackets_.end() ? std::vector<int>{} : it->second;
}

const std::vector<std::pair<int, int>>& LieAlgebra::bracket_sources(int target) const {
    if (target < 1 || target > n_) throw std::invalid_argument("bracket_sources: index out of range");
    return sources_[static_cast<std::size_t>(target)];
}

ValidationReport LieAlgebra::validate() const {
    ValidationReport report;
    for (const auto& [pair, targets] : brackets_)
        for (int k : targets)
            if (k != pair.first + pair.second)
                report.grading.push_back({pair.first, pair.second, k});

    // Jacobi mod 2: [[ei,ej],el] + [[ej,el],ei] + [[el,ei],ej] = 0
    std::vector<int> parity(static_cast<std::size_t>(n_) + 1);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            for (int l = j + 1; l <= n_; ++l) {
                std::fill(parity.begin(), parity.end(), 0);
                const int triple[3][2] = {{i, j}, {j, l}, {l, i}};
                const int outer[3] = {l, i, j};
                for (int t = 0; t < 3; ++t)
                    for (int k : bracket(triple[t][0], triple[t][1]))
                        for (int m : bracket(k, outer[t])) parity[static_cast<std::size_t>(m)] ^= 1;
                std::vector<int> residual;
                for (int m = 1; m <= n_; ++m)
                    if (parity[static_cast<std::size_t>(m)]) residual.push_back(m);
                if (!residual.empty()) report.jacobi.push_back({i, j, l, std::move(residual)});
            }
    return report;
}

std::string LieAlgebra::save() const {
    std::ostringstream out;
    out << "dim " << n_ << "\n";
    for (const auto& [pair, targets] : brackets_) {
        out << pair.first << " " << pair.second << " :";
        for (int k : targets) out << " " << k;
        out << "\n";
    }
    return out.str();
}

std::pair<LieAlgebra, ValidationReport> load_algebra(std::istream& in, const std::string& name) {
    int line_no = 0;
    int n = -1;
    std::map<std::pair<int, int>, std::vector<int>> brackets;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;   // blank or comment-only line

        if (n < 0) {
            if (first != "dim") throw ParseError(line_no, "expected 'dim N' header");
            if (!(ls >> n) || n < 1) throw ParseError(line_no, "invalid dimension");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after dimension");
            continue;
        }

        int i = 0, j = 0;
        std::string colon;
        std::istringstream bs(line);
        if (!(bs >> i >> j >> colon) || colon != ":")
            throw ParseError(line_no, "expected 'i j : k1 k2 ...'");
        if (i < 1 || i > n || j < 1 || j > n) throw ParseError(line_no, "bracket index out of range 1..n");
        if (i >= j) throw ParseError(line_no, "bracket indices must satisfy i < j");
        if (brackets.count({i, j})) throw ParseError(line_no, "duplicate bracket line");
        std::vector<int> targets;
        int k = 0;
        while (bs >> k) {
            if (k < 1 || k > n) throw ParseError(line_no, "target index out of range 1..n");
            targets.push_back(k);
        }
        if (!bs.eof()) throw ParseError(line_no, "expected whitespace-separated integers");
        if (targets.empty()) throw ParseError(line_no, "bracket line with no targets");
        std::sort(targets.begin(), targets.end());
        if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
            throw ParseError(line_no, "duplicate target index");
        brackets[{i, j}] = std::move(targets);
    }
    if (n < 0) throw ParseError(line_no, "missing 'dim N' header");
    LieAlgebra g = LieAlgebra::from_brackets(name, n, brackets);
    return {g, g.validate()};
}

} // namespace gf2coh
